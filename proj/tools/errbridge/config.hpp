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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "codegen/codegen.hpp"

namespace errbridge::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitSemantic = 1,
  kExitIo = 2,
  kExitTrap = 3,
};

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string out_dir = ".";
  codegen::GenOptions gen;
  std::string compiler;      // empty: $CXX, then c++ on PATH
  std::string module_path;   // exported as ERRBRIDGE_MODULE_PATH
  std::string golden_dir;    // test: compare generated headers against this
  std::string include_dir;   // test: location of errbridge/errbridge.h
  bool verbose = false;

  // run
  std::string function;
  std::vector<std::string> args;
};

/// Flat `key = value` settings read from errbridge.toml. Values are strings,
/// booleans or integers; tables and arrays are not supported.
using ConfigValues = std::map<std::string, std::string>;

struct ConfigError {
  int line = 0;
  std::string message;
};

std::variant<ConfigValues, ConfigError> parse_config(std::string_view text);

/// Applies `values` to `config` for every key the command line did not set.
/// Unknown keys are reported.
std::optional<ConfigError> apply_config(const ConfigValues& values,
                                        const std::vector<std::string>& set_on_command_line,
                                        CliConfig& config);

}  // namespace errbridge::cli
