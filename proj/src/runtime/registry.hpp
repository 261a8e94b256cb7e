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

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idl/validator.hpp"

namespace errbridge::runtime {

struct LoadedModule {
  std::int64_t id = 0;
  std::string canonical;  // serialized form; equal bytes mean an idempotent reload
  idl::ValidatedModule module;
};

struct LoadError {
  std::int64_t code = 0;  // EB_LOAD_*
  std::string message;
};

/// Loaded modules, addressed by dense ids. Entries are never unloaded, so
/// pointers returned by find() stay valid for the life of the registry.
class Registry {
 public:
  std::variant<std::int64_t, LoadError> load(std::string_view bytes);

  /// Looks up `<dir>/<name>.ebm` in each ':'-separated directory.
  std::variant<std::int64_t, LoadError> load_named(std::string_view name,
                                                   std::string_view search_path);

  const LoadedModule* find(std::int64_t id) const;

 private:
  mutable std::shared_mutex mutex_;
  std::vector<std::unique_ptr<LoadedModule>> modules_;
};

}  // namespace errbridge::runtime
