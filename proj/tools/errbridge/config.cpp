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

#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace errbridge::cli {

namespace {

std::string trim(std::string_view s) {
  auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return std::string(s);
}

bool parse_bool(const std::string& v, bool& out) {
  if (v == "true") {
    out = true;
    return true;
  }
  if (v == "false") {
    out = false;
    return true;
  }
  return false;
}

}  // namespace

std::variant<ConfigValues, ConfigError> parse_config(std::string_view text) {
  ConfigValues values;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    if (line.front() == '[') {
      return ConfigError{line_no, "tables are not supported"};
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) return ConfigError{line_no, "expected 'key = value'"};
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) return ConfigError{line_no, "missing key"};

    if (!value.empty() && value.front() == '"') {
      const auto close = value.find('"', 1);
      if (close == std::string::npos) return ConfigError{line_no, "unterminated string"};
      std::string rest = trim(std::string_view(value).substr(close + 1));
      if (!rest.empty() && rest.front() != '#') {
        return ConfigError{line_no, "unexpected text after string"};
      }
      value = value.substr(1, close - 1);
    } else {
      const auto hash = value.find('#');
      if (hash != std::string::npos) value = trim(std::string_view(value).substr(0, hash));
      if (value.empty()) return ConfigError{line_no, "missing value for '" + key + "'"};
    }
    values[key] = value;
  }
  return values;
}

std::optional<ConfigError> apply_config(const ConfigValues& values,
                                        const std::vector<std::string>& set_on_command_line,
                                        CliConfig& config) {
  auto overridden = [&](const std::string& key) {
    return std::find(set_on_command_line.begin(), set_on_command_line.end(), key) !=
           set_on_command_line.end();
  };
  for (const auto& [key, value] : values) {
    if (overridden(key)) continue;
    if (key == "out") {
      config.out_dir = value;
    } else if (key == "namespace") {
      config.gen.namespace_name = value;
    } else if (key == "compiler") {
      config.compiler = value;
    } else if (key == "module_path") {
      config.module_path = value;
    } else if (key == "golden") {
      config.golden_dir = value;
    } else if (key == "include_dir") {
      config.include_dir = value;
    } else if (key == "support_header") {
      config.gen.support_header_name = value;
    } else if (key == "macro_prefix") {
      config.gen.macro_prefix = value;
    } else if (key == "line_comments") {
      if (!parse_bool(value, config.gen.emit_line_comments)) {
        return ConfigError{0, "line_comments must be true or false"};
      }
    } else if (key == "verbose") {
      if (!parse_bool(value, config.verbose)) {
        return ConfigError{0, "verbose must be true or false"};
      }
    } else {
      return ConfigError{0, "unknown key '" + key + "'"};
    }
  }
  return std::nullopt;
}

}  // namespace errbridge::cli
