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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "codegen/codegen.hpp"
#include "config.hpp"
#include "interp/eval.hpp"

namespace errbridge::cli {

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_gen(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_test(const CliConfig& config, std::ostream& out, std::ostream& err);

// Shared plumbing.

enum class ReadStatus { Ok, IoError };

ReadStatus read_file(const std::filesystem::path& path, std::string& contents);

/// Writes every file or none: each artifact goes to a temporary sibling first
/// and is renamed into place only after all writes succeeded.
bool write_files_atomically(const std::filesystem::path& dir,
                            const std::vector<std::pair<std::string, std::string>>& files,
                            std::string& error);

/// Calls fn_index through eb_invoke and maps the result onto an interpreter
/// Outcome. A thrown error is identified by dyncast against every enum of the
/// module; its handle is stored in `handle_out` (caller releases) or released
/// when `handle_out` is null.
interp::Outcome invoke_as_outcome(std::int64_t module_id, const idl::InterfaceModule& module,
                                  std::uint32_t fn_index, const std::vector<Value>& args,
                                  std::uint64_t* handle_out = nullptr);

struct DifferentialReport {
  std::size_t tuples = 0;
  std::size_t mismatches = 0;
  std::size_t exclusivity_violations = 0;
  std::int64_t leaked_errors = 0;
  std::string first_mismatch;

  bool ok() const { return mismatches == 0 && exclusivity_violations == 0 && leaked_errors == 0; }
};

/// Compares eb_invoke with eval_function for every function of `module` over
/// its argument grid, wrapping each runtime result in an ExpectedModel.
DifferentialReport run_differential(std::int64_t module_id, const idl::InterfaceModule& module,
                                    std::size_t min_tuples = 64);

/// Resolves the C++ compiler for `test`: explicit override, then $CXX, then
/// `c++` on PATH. Empty when none is found.
std::string find_compiler(const std::string& override_command);

}  // namespace errbridge::cli
