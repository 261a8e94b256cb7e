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

#include "idl/ast.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <utility>

namespace errbridge::idl {

namespace {

struct OpSpelling {
  BinaryOp op;
  std::string_view text;
};

constexpr std::array<OpSpelling, 12> kOps = {{
    {BinaryOp::Add, "+"}, {BinaryOp::Sub, "-"}, {BinaryOp::Mul, "*"},
    {BinaryOp::Div, "/"}, {BinaryOp::Eq, "=="}, {BinaryOp::Ne, "!="},
    {BinaryOp::Lt, "<"},  {BinaryOp::Le, "<="}, {BinaryOp::Gt, ">"},
    {BinaryOp::Ge, ">="}, {BinaryOp::And, "&&"}, {BinaryOp::Or, "||"},
}};

}  // namespace

std::string_view to_string(ScalarType type) {
  switch (type) {
    case ScalarType::Unit: return "Unit";
    case ScalarType::Int64: return "Int64";
    case ScalarType::Float64: return "Float64";
    case ScalarType::Bool: return "Bool";
  }
  return "?";
}

std::optional<ScalarType> scalar_type_from_string(std::string_view name) {
  if (name == "Unit") return ScalarType::Unit;
  if (name == "Int64") return ScalarType::Int64;
  if (name == "Float64") return ScalarType::Float64;
  if (name == "Bool") return ScalarType::Bool;
  return std::nullopt;
}

std::string_view to_string(BinaryOp op) {
  for (const auto& entry : kOps) {
    if (entry.op == op) return entry.text;
  }
  return "?";
}

std::optional<BinaryOp> binary_op_from_string(std::string_view spelling) {
  for (const auto& entry : kOps) {
    if (entry.text == spelling) return entry.op;
  }
  return std::nullopt;
}

bool is_arithmetic(BinaryOp op) {
  return op == BinaryOp::Add || op == BinaryOp::Sub || op == BinaryOp::Mul ||
         op == BinaryOp::Div;
}

bool is_comparison(BinaryOp op) {
  return op == BinaryOp::Eq || op == BinaryOp::Ne || op == BinaryOp::Lt ||
         op == BinaryOp::Le || op == BinaryOp::Gt || op == BinaryOp::Ge;
}

bool is_logical(BinaryOp op) { return op == BinaryOp::And || op == BinaryOp::Or; }

int ErrorEnumDecl::case_index(std::string_view case_name) const {
  auto it = std::find(cases.begin(), cases.end(), case_name);
  return it == cases.end() ? -1 : static_cast<int>(it - cases.begin());
}

const ErrorEnumDecl* InterfaceModule::find_enum(std::string_view enum_name) const {
  for (const auto& e : enums) {
    if (e.name == enum_name) return &e;
  }
  return nullptr;
}

const FunctionDecl* InterfaceModule::find_function(std::string_view fn_name) const {
  int index = function_index(fn_name);
  return index < 0 ? nullptr : &functions[static_cast<std::size_t>(index)];
}

int InterfaceModule::function_index(std::string_view fn_name) const {
  for (std::size_t i = 0; i < functions.size(); ++i) {
    if (functions[i].name == fn_name) return static_cast<int>(i);
  }
  return -1;
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, BoolLit>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, FloatLit>) {
          return std::bit_cast<std::uint64_t>(lhs.value) ==
                 std::bit_cast<std::uint64_t>(rhs.value);
        } else if constexpr (std::is_same_v<T, ParamRef>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && structurally_equal(*lhs.lhs, *rhs.lhs) &&
                 structurally_equal(*lhs.rhs, *rhs.rhs);
        } else {
          return structurally_equal(*lhs.operand, *rhs.operand);
        }
      },
      a.node);
}

static bool stmt_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<If>(&a.node)) {
    const auto& y = std::get<If>(b.node);
    return structurally_equal(*x->cond, *y.cond) &&
           structurally_equal(x->then_block, y.then_block) &&
           structurally_equal(x->else_block, y.else_block);
  }
  if (const auto* x = std::get_if<Return>(&a.node)) {
    const auto& y = std::get<Return>(b.node);
    if (!x->value || !y.value) return !x->value && !y.value;
    return structurally_equal(*x->value, *y.value);
  }
  const auto& x = std::get<Throw>(a.node);
  const auto& y = std::get<Throw>(b.node);
  return x.enum_name == y.enum_name && x.case_name == y.case_name;
}

bool structurally_equal(const Block& a, const Block& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), stmt_equal);
}

bool structurally_equal(const FunctionDecl& a, const FunctionDecl& b) {
  auto param_equal = [](const Param& x, const Param& y) {
    return x.name == y.name && x.type == y.type;
  };
  return a.name == b.name && a.return_type == b.return_type && a.throws == b.throws &&
         std::equal(a.params.begin(), a.params.end(), b.params.begin(), b.params.end(),
                    param_equal) &&
         structurally_equal(a.body, b.body);
}

bool structurally_equal(const InterfaceModule& a, const InterfaceModule& b) {
  auto enum_equal = [](const ErrorEnumDecl& x, const ErrorEnumDecl& y) {
    return x.name == y.name && x.cases == y.cases;
  };
  auto fn_equal = [](const FunctionDecl& x, const FunctionDecl& y) {
    return structurally_equal(x, y);
  };
  return a.name == b.name &&
         std::equal(a.enums.begin(), a.enums.end(), b.enums.begin(), b.enums.end(),
                    enum_equal) &&
         std::equal(a.functions.begin(), a.functions.end(), b.functions.begin(),
                    b.functions.end(), fn_equal);
}

ExprPtr clone(const Expr& expr) {
  auto copy = std::make_unique<Expr>();
  copy->pos = expr.pos;
  copy->type = expr.type;
  copy->node = std::visit(
      [](const auto& n) -> decltype(Expr::node) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Binary>) {
          return Binary{n.op, clone(*n.lhs), clone(*n.rhs)};
        } else if constexpr (std::is_same_v<T, FloatCast>) {
          return FloatCast{clone(*n.operand)};
        } else {
          return n;
        }
      },
      expr.node);
  return copy;
}

Block clone(const Block& block) {
  Block out;
  out.reserve(block.size());
  for (const auto& stmt : block) {
    Stmt copy;
    copy.pos = stmt.pos;
    if (const auto* s = std::get_if<If>(&stmt.node)) {
      copy.node = If{clone(*s->cond), clone(s->then_block), clone(s->else_block)};
    } else if (const auto* s = std::get_if<Return>(&stmt.node)) {
      copy.node = Return{s->value ? clone(*s->value) : nullptr};
    } else {
      copy.node = std::get<Throw>(stmt.node);
    }
    out.push_back(std::move(copy));
  }
  return out;
}

FunctionDecl clone(const FunctionDecl& fn) {
  FunctionDecl copy;
  copy.name = fn.name;
  copy.params = fn.params;
  copy.return_type = fn.return_type;
  copy.throws = fn.throws;
  copy.body = clone(fn.body);
  copy.pos = fn.pos;
  return copy;
}

InterfaceModule clone(const InterfaceModule& module) {
  InterfaceModule copy;
  copy.name = module.name;
  copy.enums = module.enums;
  copy.pos = module.pos;
  for (const auto& fn : module.functions) copy.functions.push_back(clone(fn));
  return copy;
}

}  // namespace errbridge::idl
