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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "idl/diagnostic.hpp"

namespace errbridge::idl {

enum class TokenKind {
  KwModule, KwEnum, KwCase, KwFunc, KwThrows, KwIf, KwElse, KwReturn, KwThrow,
  KwTrue, KwFalse,
  Ident, IntLiteral, FloatLiteral,
  LParen, RParen, LBrace, RBrace, Colon, Comma, Dot, Arrow,
  Plus, Minus, Star, Slash,
  EqEq, NotEq, Less, LessEq, Greater, GreaterEq, AndAnd, OrOr,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  int line = 1;
  int column = 1;
};

using LexResult = std::variant<std::vector<Token>, Diagnostics>;

/// Splits IDL source into tokens. `//` comments and whitespace are dropped.
LexResult tokenize(std::string_view source);

}  // namespace errbridge::idl
