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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "doctest.h"
#include "errbridge/errbridge.h"
#include "idl/serialize.hpp"
#include "idl/validator.hpp"

namespace testing {

namespace fs = std::filesystem;

inline fs::path fixture_dir() { return EB_FIXTURE_DIR; }
inline fs::path golden_dir() { return EB_GOLDEN_DIR; }

inline std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<fs::path> fixture_files() {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(fixture_dir())) {
    if (entry.path().extension() == ".eb") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

inline errbridge::idl::ValidatedModule compile_ok(std::string_view source) {
  auto result = errbridge::idl::compile_source(source);
  if (auto* diags = std::get_if<errbridge::idl::Diagnostics>(&result)) {
    std::string text;
    for (const auto& d : *diags) text += errbridge::idl::format_diagnostic("<src>", d) + "\n";
    FAIL("unexpected diagnostics:\n" << text);
  }
  return std::move(std::get<errbridge::idl::ValidatedModule>(result));
}

inline errbridge::idl::Diagnostics compile_errors(std::string_view source) {
  auto result = errbridge::idl::compile_source(source);
  REQUIRE_MESSAGE(std::holds_alternative<errbridge::idl::Diagnostics>(result),
                  "expected diagnostics for:\n" << source);
  return std::get<errbridge::idl::Diagnostics>(result);
}

inline errbridge::idl::ValidatedModule load_fixture(std::string_view name) {
  return compile_ok(read_text(fixture_dir() / (std::string(name) + ".eb")));
}

/// Registers `module` with the runtime and returns its id.
inline std::int64_t register_module(const errbridge::idl::ValidatedModule& module) {
  const std::string bytes = errbridge::idl::serialize_module(module);
  const std::int64_t id = eb_load_module(bytes.data(), bytes.size());
  REQUIRE_MESSAGE(id >= 0, "module " << module->name << " failed to load");
  return id;
}

/// Replaces the aborting default trap handler for the scope.
class TrapRecorder {
 public:
  TrapRecorder() : previous_(eb_set_trap_handler(&TrapRecorder::record, this)) {}
  ~TrapRecorder() { eb_set_trap_handler(previous_, nullptr); }
  TrapRecorder(const TrapRecorder&) = delete;
  TrapRecorder& operator=(const TrapRecorder&) = delete;

  const std::vector<std::string>& messages() const { return messages_; }
  std::size_t count() const { return messages_.size(); }

 private:
  static void record(const char* message, void* self) {
    static_cast<TrapRecorder*>(self)->messages_.emplace_back(message ? message : "");
  }

  eb_trap_handler previous_;
  std::vector<std::string> messages_;
};

inline eb_type_id abi_type_id(const char* module, const char* enum_name, std::uint64_t hash) {
  return eb_type_id{module, enum_name, hash};
}

}  // namespace testing
