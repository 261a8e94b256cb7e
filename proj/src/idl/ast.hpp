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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace errbridge::idl {

struct SourcePos {
  int line = 0;  // 1-based; 0 when the node did not come from source text
  int column = 0;
};

enum class ScalarType : std::uint8_t { Unit, Int64, Float64, Bool };

std::string_view to_string(ScalarType type);
std::optional<ScalarType> scalar_type_from_string(std::string_view name);

enum class BinaryOp : std::uint8_t {
  Add, Sub, Mul, Div,
  Eq, Ne, Lt, Le, Gt, Ge,
  And, Or,
};

std::string_view to_string(BinaryOp op);
std::optional<BinaryOp> binary_op_from_string(std::string_view spelling);
bool is_arithmetic(BinaryOp op);
bool is_comparison(BinaryOp op);
bool is_logical(BinaryOp op);

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct IntLit { std::int64_t value = 0; };
struct FloatLit { double value = 0.0; };
struct BoolLit { bool value = false; };
struct ParamRef { std::string name; };
struct Binary {
  BinaryOp op = BinaryOp::Add;
  ExprPtr lhs;
  ExprPtr rhs;
};
struct FloatCast { ExprPtr operand; };

struct Expr {
  std::variant<IntLit, FloatLit, BoolLit, ParamRef, Binary, FloatCast> node;
  SourcePos pos;
  // Filled by validation.
  std::optional<ScalarType> type;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct If {
  ExprPtr cond;
  Block then_block;
  Block else_block;
};
struct Return {
  ExprPtr value;  // null for a bare `return`
};
struct Throw {
  std::string enum_name;
  std::string case_name;
  SourcePos case_pos;
};

struct Stmt {
  std::variant<If, Return, Throw> node;
  SourcePos pos;
};

struct ErrorEnumDecl {
  std::string name;
  std::vector<std::string> cases;
  SourcePos pos;
  std::vector<SourcePos> case_pos;

  /// Declaration position of `case_name`, or -1.
  int case_index(std::string_view case_name) const;
};

struct Param {
  std::string name;
  ScalarType type = ScalarType::Int64;
  SourcePos pos;
};

struct FunctionDecl {
  std::string name;
  std::vector<Param> params;
  ScalarType return_type = ScalarType::Unit;
  bool throws = false;
  Block body;
  SourcePos pos;
};

struct InterfaceModule {
  std::string name;
  std::vector<ErrorEnumDecl> enums;
  std::vector<FunctionDecl> functions;
  SourcePos pos;

  const ErrorEnumDecl* find_enum(std::string_view enum_name) const;
  const FunctionDecl* find_function(std::string_view fn_name) const;
  int function_index(std::string_view fn_name) const;
};

// Structural equality ignores source positions and type annotations.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Block& a, const Block& b);
bool structurally_equal(const FunctionDecl& a, const FunctionDecl& b);
bool structurally_equal(const InterfaceModule& a, const InterfaceModule& b);

ExprPtr clone(const Expr& expr);
Block clone(const Block& block);
FunctionDecl clone(const FunctionDecl& fn);
InterfaceModule clone(const InterfaceModule& module);

}  // namespace errbridge::idl
