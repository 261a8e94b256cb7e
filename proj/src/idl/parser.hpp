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

#include <span>
#include <variant>

#include "idl/ast.hpp"
#include "idl/diagnostic.hpp"
#include "idl/lexer.hpp"

namespace errbridge::idl {

using ParseResult = std::variant<InterfaceModule, Diagnostics>;

/// Builds an unvalidated module. Names in `throw` statements and parameter
/// references are not resolved here; see validate().
///
/// Type spellings accepted in signatures: Int/Int64, Float/Float64/Double,
/// Bool, and Void/Unit as a return type. `else if` is sugar for an else block
/// holding a single if statement, and `-literal` folds into the literal.
ParseResult parse(std::span<const Token> tokens);

}  // namespace errbridge::idl
