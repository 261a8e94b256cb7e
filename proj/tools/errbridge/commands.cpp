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


#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <system_error>

#include "errbridge/errbridge.h"
#include "idl/serialize.hpp"
#include "interp/type_id.hpp"

namespace errbridge::cli {

namespace fs = std::filesystem;

ReadStatus read_file(const fs::path& path, std::string& contents) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return ReadStatus::IoError;
  std::ifstream in(path, std::ios::binary);
  if (!in) return ReadStatus::IoError;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return ReadStatus::IoError;
  contents = buffer.str();
  return ReadStatus::Ok;
}

bool write_files_atomically(const fs::path& dir,
                            const std::vector<std::pair<std::string, std::string>>& files,
                            std::string& error) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    error = "cannot create directory " + dir.string() + ": " + ec.message();
    return false;
  }

  std::random_device rd;
  const std::string suffix = ".tmp" + std::to_string(rd());
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const auto& t : temps) fs::remove(t, ec);
  };

  for (const auto& [name, bytes] : files) {
    fs::path temp = dir / ("." + name + suffix);
    temps.push_back(temp);
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.close();
    if (!out) {
      error = "cannot write " + temp.string();
      cleanup();
      return false;
    }
  }
  for (std::size_t i = 0; i < files.size(); ++i) {
    fs::rename(temps[i], dir / files[i].first, ec);
    if (ec) {
      error = "cannot rename into " + (dir / files[i].first).string() + ": " + ec.message();
      // Files renamed so far are complete; drop them so nothing partial remains.
      for (std::size_t j = 0; j < i; ++j) fs::remove(dir / files[j].first, ec);
      cleanup();
      return false;
    }
  }
  return true;
}

namespace {

void print_diagnostics(const std::string& file, const idl::Diagnostics& diags, std::ostream& err) {
  for (const auto& d : diags) err << idl::format_diagnostic(file, d) << '\n';
}

/// Reads and validates the input. Returns an exit code on failure.
std::variant<idl::ValidatedModule, int> load_input(const CliConfig& config, std::ostream& err) {
  std::string source;
  if (read_file(config.input, source) != ReadStatus::Ok) {
    err << config.input << ": cannot read file\n";
    return kExitIo;
  }
  auto result = idl::compile_source(source);
  if (auto* diags = std::get_if<idl::Diagnostics>(&result)) {
    print_diagnostics(config.input, *diags, err);
    return kExitSemantic;
  }
  auto& module = std::get<idl::ValidatedModule>(result);
  if (config.verbose) print_diagnostics(config.input, module.warnings(), err);
  return std::move(module);
}

std::string last_trap_text() {
  char buffer[1024];
  const std::size_t n = eb_last_trap_message(buffer, sizeof(buffer));
  return std::string(buffer, n < sizeof(buffer) ? n : sizeof(buffer));
}

std::string last_load_text() {
  char buffer[1024];
  const std::size_t n = eb_last_load_error(buffer, sizeof(buffer));
  return std::string(buffer, n < sizeof(buffer) ? n : sizeof(buffer));
}

}  // namespace

interp::Outcome invoke_as_outcome(std::int64_t module_id, const idl::InterfaceModule& module,
                                  std::uint32_t fn_index, const std::vector<Value>& args,
                                  std::uint64_t* handle_out) {
  std::vector<eb_value> abi;
  abi.reserve(args.size());
  for (const auto& a : args) abi.push_back(a.to_abi());

  eb_error_handle error = EB_NULL_ERROR;
  eb_value ret = eb_value_unit();
  const int status =
      eb_invoke(module_id, fn_index, abi.data(), abi.size(), &error, &ret);
  if (status == EB_STATUS_TRAP) return interp::Trap{last_trap_text()};
  if (status == EB_STATUS_RETURNED) {
    auto v = Value::from_abi(ret);
    if (!v) return interp::Trap{"runtime returned an unknown value tag"};
    return *v;
  }

  interp::Outcome outcome = interp::Trap{"thrown error matches no enum of the module"};
  for (const auto& e : module.enums) {
    const TypeId id = TypeId::of(module.name, e.name);
    const eb_type_id target{id.module_name.c_str(), id.enum_name.c_str(), id.hash};
    const eb_cast_result cast = eb_error_dyncast(error, &target);
    if (cast.matched != 0 && cast.case_index >= 0 &&
        static_cast<std::size_t>(cast.case_index) < e.cases.size()) {
      outcome = interp::ThrownError{id, cast.case_index,
                                    e.cases[static_cast<std::size_t>(cast.case_index)]};
      break;
    }
  }
  if (handle_out != nullptr) {
    *handle_out = error;
  } else {
    eb_error_release(error);
  }
  return outcome;
}

int cmd_check(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto loaded = load_input(config, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& module = std::get<idl::ValidatedModule>(loaded);
  if (config.verbose) {
    out << "module " << module->name << ": " << module->enums.size() << " enum(s), "
        << module->functions.size() << " function(s)\n";
  }
  return kExitOk;
}

int cmd_gen(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto loaded = load_input(config, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& module = std::get<idl::ValidatedModule>(loaded);

  auto generated = codegen::generate(module, config.gen);
  if (auto* e = std::get_if<codegen::GenError>(&generated)) {
    err << config.input << ": " << e->message << '\n';
    return kExitSemantic;
  }
  const auto& artifacts = std::get<codegen::GenArtifacts>(generated);
  std::string io_error;
  if (!write_files_atomically(config.out_dir,
                              {{artifacts.support_header_name, artifacts.support_header},
                               {artifacts.module_header_name, artifacts.module_header},
                               {artifacts.registry_name, artifacts.registry_bytes}},
                              io_error)) {
    err << io_error << '\n';
    return kExitIo;
  }
  for (const auto& entry : artifacts.manifest) {
    out << entry.hash_hex() << "  " << (fs::path(config.out_dir) / entry.filename).string()
        << '\n';
  }
  return kExitOk;
}

namespace {

struct QuietTrap {
  static void record(const char* message, void* user) {
    static_cast<QuietTrap*>(user)->messages.push_back(message ? message : "");
  }
  std::vector<std::string> messages;
};

}  // namespace

int cmd_run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto loaded = load_input(config, err);
  if (auto* code = std::get_if<int>(&loaded)) return *code;
  const auto& module = std::get<idl::ValidatedModule>(loaded);

  const int index = module->function_index(config.function);
  if (index < 0) {
    err << config.input << ": no function named '" << config.function << "'\n";
    return kExitSemantic;
  }
  const auto& fn = module->functions[static_cast<std::size_t>(index)];
  if (config.args.size() != fn.params.size()) {
    err << "'" << fn.name << "' takes " << fn.params.size() << " argument(s), got "
        << config.args.size() << '\n';
    return kExitSemantic;
  }
  std::vector<Value> args;
  for (std::size_t i = 0; i < fn.params.size(); ++i) {
    auto v = Value::parse(config.args[i], fn.params[i].type);
    if (!v) {
      err << "argument '" << config.args[i] << "' is not a valid "
          << idl::to_string(fn.params[i].type) << " for parameter '" << fn.params[i].name
          << "'\n";
      return kExitSemantic;
    }
    args.push_back(*v);
  }

  const std::string bytes = idl::serialize_module(module);
  const std::int64_t id = eb_load_module(bytes.data(), bytes.size());
  if (id < 0) {
    err << "cannot load module: " << last_load_text() << '\n';
    return kExitSemantic;
  }

  QuietTrap traps;
  eb_trap_handler previous = eb_set_trap_handler(&QuietTrap::record, &traps);
  const interp::Outcome outcome =
      invoke_as_outcome(id, module.module(), static_cast<std::uint32_t>(index), args);
  eb_set_trap_handler(previous, nullptr);

  if (outcome.is_trap()) {
    err << "trap: " << outcome.trap().message << '\n';
    return kExitTrap;
  }
  if (!traps.messages.empty()) {
    err << "trap: " << traps.messages.front() << '\n';
    return kExitTrap;
  }
  if (outcome.has_value()) {
    out << "value: " << outcome.value().to_string() << '\n';
  } else {
    out << "error: " << outcome.error().type.enum_name << '.' << outcome.error().case_name
        << '\n';
  }
  out << "live_errors: " << eb_live_errors() << '\n';
  return eb_live_errors() == 0 ? kExitOk : kExitTrap;
}

std::string find_compiler(const std::string& override_command) {
  if (!override_command.empty()) return override_command;
  if (const char* cxx = std::getenv("CXX"); cxx != nullptr && *cxx != '\0') return cxx;
  const char* path = std::getenv("PATH");
  if (path == nullptr) return {};
  std::stringstream dirs(path);
  std::string dir;
  while (std::getline(dirs, dir, ':')) {
    if (dir.empty()) continue;
    std::error_code ec;
    const fs::path candidate = fs::path(dir) / "c++";
    if (fs::exists(candidate, ec)) return candidate.string();
  }
  return {};
}

}  // namespace errbridge::cli
