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

#include <cctype>
#include <cstdio>

#include "codegen/codegen.hpp"
#include "idl/serialize.hpp"
#include "interp/type_id.hpp"

namespace errbridge::codegen {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s.front());
  if (!std::isalpha(first) && first != '_') return false;
  for (char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

}  // namespace

std::string ManifestEntry::hash_hex() const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(content_hash));
  return buf;
}

std::optional<GenError> check_options(const GenOptions& options) {
  if (!options.namespace_name.empty() &&
      (!is_identifier(options.namespace_name) || is_reserved_identifier(options.namespace_name))) {
    return GenError{"invalid namespace '" + options.namespace_name + "'"};
  }
  if (!is_identifier(options.macro_prefix)) {
    return GenError{"invalid macro prefix '" + options.macro_prefix + "'"};
  }
  const std::string& header = options.support_header_name;
  if (header.empty() || header.find_first_of("/\\\"") != std::string::npos) {
    return GenError{"invalid support header name '" + header + "'"};
  }
  return std::nullopt;
}

std::string emit_registry(const idl::ValidatedModule& module) {
  return idl::serialize_module(module);
}

std::variant<GenArtifacts, GenError> generate(const idl::ValidatedModule& module,
                                              const GenOptions& options) {
  if (auto err = check_options(options)) return *err;
  auto header = emit_module_header(module, options);
  if (auto* err = std::get_if<GenError>(&header)) return *err;

  GenArtifacts out;
  out.support_header_name = options.support_header_name;
  out.support_header = emit_support_header(options);
  out.module_header_name = module->name + ".h";
  out.module_header = std::move(std::get<std::string>(header));
  out.registry_name = module->name + ".ebm";
  out.registry_bytes = emit_registry(module);
  if (out.module_header_name == out.support_header_name) {
    return GenError{"support header name '" + out.support_header_name +
                    "' collides with the module header"};
  }
  out.manifest = {
      {out.support_header_name, fnv1a64(out.support_header)},
      {out.module_header_name, fnv1a64(out.module_header)},
      {out.registry_name, fnv1a64(out.registry_bytes)},
  };
  return out;
}

}  // namespace errbridge::codegen
