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

#include "runtime/error_table.hpp"

#include <mutex>

namespace errbridge::runtime {

ErrorTable::Handle ErrorTable::create(ErrorBox box) {
  std::unique_lock lock(mutex_);
  std::uint32_t index;
  if (!free_.empty()) {
    index = free_.back();
    free_.pop_back();
  } else {
    index = static_cast<std::uint32_t>(slots_.size());
    slots_.emplace_back();
  }
  Slot& slot = slots_[index];
  slot.box = std::make_unique<ErrorBox>(std::move(box));
  slot.refcount.store(1, std::memory_order_relaxed);
  live_.fetch_add(1, std::memory_order_acq_rel);
  allocations_.fetch_add(1, std::memory_order_relaxed);
  const std::uint64_t generation = slot.generation.load(std::memory_order_relaxed);
  return (generation << 32) | (static_cast<std::uint64_t>(index) + 1);
}

ErrorTable::Slot* ErrorTable::resolve(Handle h) const {
  if (h == 0) return nullptr;
  const std::uint64_t index_plus_one = h & 0xffffffffull;
  const auto generation = static_cast<std::uint32_t>(h >> 32);
  if (index_plus_one == 0 || index_plus_one > slots_.size()) return nullptr;
  auto& slot = const_cast<Slot&>(slots_[index_plus_one - 1]);
  if (slot.generation.load(std::memory_order_acquire) != generation) return nullptr;
  return &slot;
}

bool ErrorTable::retain(Handle h) {
  std::shared_lock lock(mutex_);
  Slot* slot = resolve(h);
  if (slot == nullptr) return false;
  std::int64_t count = slot->refcount.load(std::memory_order_relaxed);
  do {
    if (count <= 0) return false;
  } while (!slot->refcount.compare_exchange_weak(count, count + 1, std::memory_order_acq_rel));
  return true;
}

bool ErrorTable::release(Handle h) {
  {
    std::shared_lock lock(mutex_);
    Slot* slot = resolve(h);
    if (slot == nullptr) return false;
    std::int64_t count = slot->refcount.load(std::memory_order_relaxed);
    do {
      if (count <= 0) return false;
    } while (!slot->refcount.compare_exchange_weak(count, count - 1, std::memory_order_acq_rel));
    if (count != 1) return true;
  }
  // This call dropped the last reference; nobody else may legally hold it.
  std::unique_lock lock(mutex_);
  const auto index = static_cast<std::uint32_t>((h & 0xffffffffull) - 1);
  Slot& slot = slots_[index];
  slot.box.reset();
  slot.generation.fetch_add(1, std::memory_order_acq_rel);
  free_.push_back(index);
  live_.fetch_sub(1, std::memory_order_acq_rel);
  return true;
}

std::optional<ErrorBox> ErrorTable::inspect(Handle h) const {
  std::shared_lock lock(mutex_);
  const Slot* slot = resolve(h);
  if (slot == nullptr || slot->refcount.load(std::memory_order_acquire) <= 0 || !slot->box) {
    return std::nullopt;
  }
  return *slot->box;
}

std::int64_t ErrorTable::refcount(Handle h) const {
  std::shared_lock lock(mutex_);
  const Slot* slot = resolve(h);
  return slot == nullptr ? 0 : slot->refcount.load(std::memory_order_acquire);
}

}  // namespace errbridge::runtime
