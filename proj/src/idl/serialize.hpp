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

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "idl/validator.hpp"

namespace errbridge::idl {

/// Canonical module form: JSON with sorted keys, two-space indent and a
/// trailing newline. Source positions are not serialized.
///
///   {"name", "enums": [{"name", "cases"}],
///    "functions": [{"name", "params": [{"name", "type"}], "returns",
///                   "throws", "body"}]}
///
/// Statements are objects tagged by "kind": "if" {cond, then, else},
/// "return" {value|null}, "throw" {enum, case}. Expressions: "int", "float",
/// "bool" {value}, "param" {name}, "binary" {op, lhs, rhs},
/// "float_cast" {operand}.
std::string serialize_module(const ValidatedModule& module);

struct DeserializeError {
  std::size_t offset = 0;  // byte offset into the input; 0 for schema errors
  std::string message;
};

using DeserializeResult = std::variant<ValidatedModule, DeserializeError>;

/// Parses the canonical form and re-validates the result.
DeserializeResult deserialize_module(std::string_view bytes);

}  // namespace errbridge::idl
