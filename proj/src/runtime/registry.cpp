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

#include "runtime/registry.hpp"

#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

#include "errbridge/errbridge.h"
#include "idl/serialize.hpp"

namespace errbridge::runtime {

std::variant<std::int64_t, LoadError> Registry::load(std::string_view bytes) {
  auto parsed = idl::deserialize_module(bytes);
  if (auto* err = std::get_if<idl::DeserializeError>(&parsed)) {
    return LoadError{EB_LOAD_MALFORMED,
                     "malformed module at byte " + std::to_string(err->offset) + ": " +
                         err->message};
  }
  auto& module = std::get<idl::ValidatedModule>(parsed);
  std::string canonical = idl::serialize_module(module);

  std::unique_lock lock(mutex_);
  for (const auto& loaded : modules_) {
    if (loaded->module->name != module->name) continue;
    if (loaded->canonical == canonical) return loaded->id;
    return LoadError{EB_LOAD_CONFLICT,
                     "module '" + module->name + "' is already loaded with different content"};
  }
  const auto id = static_cast<std::int64_t>(modules_.size());
  modules_.push_back(
      std::make_unique<LoadedModule>(LoadedModule{id, std::move(canonical), std::move(module)}));
  return id;
}

std::variant<std::int64_t, LoadError> Registry::load_named(std::string_view name,
                                                           std::string_view search_path) {
  {
    std::shared_lock lock(mutex_);
    for (const auto& loaded : modules_) {
      if (loaded->module->name == name) return loaded->id;
    }
  }
  std::string dirs(search_path.empty() ? "." : search_path);
  std::stringstream split(dirs);
  std::string dir;
  while (std::getline(split, dir, ':')) {
    if (dir.empty()) dir = ".";
    const std::filesystem::path file = std::filesystem::path(dir) / (std::string(name) + ".ebm");
    std::ifstream in(file, std::ios::binary);
    if (!in) continue;
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto result = load(bytes);
    if (auto* id = std::get_if<std::int64_t>(&result)) {
      if (find(*id)->module->name != name) {
        return LoadError{EB_LOAD_MALFORMED,
                         file.string() + " declares module '" + find(*id)->module->name +
                             "', expected '" + std::string(name) + "'"};
      }
    }
    return result;
  }
  return LoadError{EB_LOAD_NOT_FOUND, "module '" + std::string(name) + ".ebm' not found in '" +
                                          dirs + "' (set ERRBRIDGE_MODULE_PATH)"};
}

const LoadedModule* Registry::find(std::int64_t id) const {
  std::shared_lock lock(mutex_);
  if (id < 0 || id >= static_cast<std::int64_t>(modules_.size())) return nullptr;
  return modules_[static_cast<std::size_t>(id)].get();
}

}  // namespace errbridge::runtime
