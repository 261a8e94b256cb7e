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


#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"

using namespace errbridge::cli;

namespace {

/// Loads errbridge.toml (explicit path, or the working directory if present).
int load_config_file(const std::string& explicit_path, const std::vector<std::string>& set_keys,
                     CliConfig& config) {
  std::string path = explicit_path;
  if (path.empty()) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file("errbridge.toml", ec)) return kExitOk;
    path = "errbridge.toml";
  }
  std::string text;
  if (read_file(path, text) != ReadStatus::Ok) {
    std::cerr << path << ": cannot read config file\n";
    return kExitIo;
  }
  auto parsed = parse_config(text);
  if (auto* e = std::get_if<ConfigError>(&parsed)) {
    std::cerr << path << ":" << e->line << ": " << e->message << '\n';
    return kExitIo;
  }
  if (auto e = apply_config(std::get<ConfigValues>(parsed), set_keys, config)) {
    std::cerr << path << ": " << e->message << '\n';
    return kExitIo;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CliConfig config;
  std::string config_path;

  CLI::App app{"errbridge: error-bridging interface compiler and runtime driver"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "errbridge 0.1.0");

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("input", config.input, "Interface module (.eb)")->required();
    sub->add_option("--out", config.out_dir, "Output directory");
    sub->add_option("--namespace", config.gen.namespace_name, "C++ namespace for the module");
    sub->add_option("--support-header", config.gen.support_header_name,
                    "File name of the support header");
    sub->add_option("--macro-prefix", config.gen.macro_prefix, "Prefix of generated macros");
    sub->add_flag("--line-comments", config.gen.emit_line_comments,
                  "Annotate thunks with source line comments");
    sub->add_option("--module-path", config.module_path,
                    "Sets ERRBRIDGE_MODULE_PATH for this process and its children");
    sub->add_option("--config", config_path, "Config file (default: ./errbridge.toml)");
    sub->add_flag("-v,--verbose", config.verbose, "Verbose output");
  };

  auto* check = app.add_subcommand("check", "Validate a module");
  add_common(check);
  auto* gen = app.add_subcommand("gen", "Generate headers and the registry file");
  add_common(gen);
  auto* run = app.add_subcommand("run", "Call a function through the runtime");
  add_common(run);
  run->add_option("function", config.function, "Function name")->required();
  run->add_option("args", config.args, "Arguments");
  auto* test = app.add_subcommand("test", "Generate, compare and cross-check a module");
  add_common(test);
  test->add_option("--compiler", config.compiler, "C++ compiler for the compile stages");
  test->add_option("--golden", config.golden_dir, "Directory of expected generated files");
  test->add_option("--include-dir", config.include_dir,
                   "Directory containing errbridge/errbridge.h");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  CLI::App* sub = app.get_subcommands().front();
  config.subcommand = sub->get_name();

  static const char* const kKeys[][2] = {
      {"--out", "out"},
      {"--namespace", "namespace"},
      {"--support-header", "support_header"},
      {"--macro-prefix", "macro_prefix"},
      {"--line-comments", "line_comments"},
      {"--module-path", "module_path"},
      {"--verbose", "verbose"},
      {"--compiler", "compiler"},
      {"--golden", "golden"},
      {"--include-dir", "include_dir"},
  };
  std::vector<std::string> set_keys;
  for (const auto& [flag, key] : kKeys) {
    CLI::Option* opt = sub->get_option_no_throw(flag);
    if (opt != nullptr && opt->count() > 0) set_keys.emplace_back(key);
  }
  if (int code = load_config_file(config_path, set_keys, config); code != kExitOk) return code;

  if (!config.module_path.empty()) setenv("ERRBRIDGE_MODULE_PATH", config.module_path.c_str(), 1);

  if (config.subcommand == "check") return cmd_check(config, std::cout, std::cerr);
  if (config.subcommand == "gen") return cmd_gen(config, std::cout, std::cerr);
  if (config.subcommand == "run") return cmd_run(config, std::cout, std::cerr);
  return cmd_test(config, std::cout, std::cerr);
}
