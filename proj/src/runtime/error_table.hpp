// Copyright 2026 The errbridge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <atomic>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "interp/type_id.hpp"

namespace errbridge::runtime {

struct ErrorBox {
  TypeId type;
  int case_index = 0;
  std::string message;
};

/// Refcounted error boxes addressed by opaque 64-bit handles.
///
/// A handle packs (generation << 32 | slot + 1). A slot's generation is bumped
/// when its box dies, so a stale handle never resolves to a reused slot; that
/// is what makes double release detectable.
class ErrorTable {
 public:
  using Handle = std::uint64_t;

  /// New box with refcount 1.
  Handle create(ErrorBox box);

  /// False when the handle is not live.
  bool retain(Handle h);

  /// False when the handle is not live. Destroys the box at refcount 0.
  bool release(Handle h);

  /// Copy of the box, or nullopt for a dead/null handle. Refcounts untouched.
  std::optional<ErrorBox> inspect(Handle h) const;

  /// 0 for a dead/null handle.
  std::int64_t refcount(Handle h) const;

  std::int64_t live() const { return live_.load(std::memory_order_acquire); }
  std::int64_t total_allocations() const { return allocations_.load(std::memory_order_relaxed); }

 private:
  struct Slot {
    std::atomic<std::uint32_t> generation{1};
    std::atomic<std::int64_t> refcount{0};
    std::unique_ptr<ErrorBox> box;
  };

  // Caller holds mutex_ (shared or exclusive).
  Slot* resolve(Handle h) const;

  mutable std::shared_mutex mutex_;
  std::deque<Slot> slots_;
  std::vector<std::uint32_t> free_;
  std::atomic<std::int64_t> live_{0};
  std::atomic<std::int64_t> allocations_{0};
};

}  // namespace errbridge::runtime
