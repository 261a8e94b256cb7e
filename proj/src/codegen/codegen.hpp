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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idl/validator.hpp"

namespace errbridge::codegen {

struct GenOptions {
  std::string namespace_name;  // empty: the module name
  std::string support_header_name = "errbridge_support.h";
  std::string macro_prefix = "EB";
  bool emit_line_comments = false;
};

struct GenError {
  std::string message;
};

struct ManifestEntry {
  std::string filename;
  std::uint64_t content_hash = 0;  // FNV-1a 64 of the file bytes

  std::string hash_hex() const;
};

struct GenArtifacts {
  std::string support_header_name;
  std::string support_header;
  std::string module_header_name;  // <Module>.h
  std::string module_header;
  std::string registry_name;  // <Module>.ebm
  std::string registry_bytes;
  std::vector<ManifestEntry> manifest;
};

/// nullopt when the options are usable for `module_name`.
std::optional<GenError> check_options(const GenOptions& options);

/// Support header: Swift::Error, Swift::Optional<T>, Swift::Expected<T>, the
/// ThrowingResult alias and the <prefix>_RETURN_THUNK macro behind the
/// `__cpp_exceptions` gate.
std::string emit_support_header(const GenOptions& options);

/// Per-module header: enum mirrors with their type ids, the `_impl` call
/// wrappers over eb_invoke, and one inline thunk per function.
std::variant<std::string, GenError> emit_module_header(const idl::ValidatedModule& module,
                                                       const GenOptions& options);

/// Canonical serialized module (the runtime's input).
std::string emit_registry(const idl::ValidatedModule& module);

std::variant<GenArtifacts, GenError> generate(const idl::ValidatedModule& module,
                                              const GenOptions& options);

/// True for C++ keywords and names the generated code reserves.
bool is_reserved_identifier(std::string_view name);

}  // namespace errbridge::codegen
