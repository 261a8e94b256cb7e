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

#include "interp/eval.hpp"

#include <cassert>
#include <limits>
#include <optional>

namespace errbridge::interp {

using idl::BinaryOp;
using idl::ScalarType;

std::string Outcome::to_string() const {
  if (has_value()) return "value: " + value().to_string();
  if (has_error()) return "error: " + error().type.enum_name + "." + error().case_name;
  return "trap: " + trap().message;
}

namespace {

// Unwinds the body when a trap fires.
struct TrapSignal {
  std::string message;
};

// Unwinds the body on `return` / `throw`.
struct Exit {
  std::variant<Value, ThrownError> result;
};

double to_double(const Value& v) {
  return v.type() == ScalarType::Int64 ? static_cast<double>(v.as_int()) : v.as_float();
}

class Frame {
 public:
  Frame(const idl::InterfaceModule& module, const idl::FunctionDecl& fn,
        std::span<const Value> args)
      : module_(module), fn_(fn), args_(args) {}

  std::variant<Value, ThrownError> run() {
    try {
      exec(fn_.body);
    } catch (Exit& exit) {
      return std::move(exit.result);
    }
    // Validation guarantees non-Unit functions never fall off the end.
    if (fn_.return_type != ScalarType::Unit) {
      throw TrapSignal{"function '" + fn_.name + "' reached end of body without returning"};
    }
    return Value::unit();
  }

 private:
  void exec(const idl::Block& block) {
    for (const auto& stmt : block) {
      if (const auto* s = std::get_if<idl::If>(&stmt.node)) {
        const Value cond = eval(*s->cond);
        exec(cond.as_bool() ? s->then_block : s->else_block);
      } else if (const auto* s = std::get_if<idl::Return>(&stmt.node)) {
        Value v = s->value ? eval(*s->value) : Value::unit();
        if (fn_.return_type == ScalarType::Float64 && v.type() == ScalarType::Int64) {
          v = Value::float64(static_cast<double>(v.as_int()));
        }
        throw Exit{v};
      } else {
        const auto& th = std::get<idl::Throw>(stmt.node);
        const idl::ErrorEnumDecl* decl = module_.find_enum(th.enum_name);
        assert(decl != nullptr);
        throw Exit{ThrownError{TypeId::of(module_.name, th.enum_name),
                               decl->case_index(th.case_name), th.case_name}};
      }
    }
  }

  Value eval(const idl::Expr& expr) {
    return std::visit([&](const auto& node) { return eval_node(node); }, expr.node);
  }

  Value eval_node(const idl::IntLit& n) { return Value::int64(n.value); }
  Value eval_node(const idl::FloatLit& n) { return Value::float64(n.value); }
  Value eval_node(const idl::BoolLit& n) { return Value::boolean(n.value); }

  Value eval_node(const idl::ParamRef& n) {
    for (std::size_t i = 0; i < fn_.params.size(); ++i) {
      if (fn_.params[i].name == n.name) return args_[i];
    }
    throw TrapSignal{"unknown parameter '" + n.name + "'"};
  }

  Value eval_node(const idl::FloatCast& n) { return Value::float64(to_double(eval(*n.operand))); }

  Value eval_node(const idl::Binary& n) {
    if (n.op == BinaryOp::And || n.op == BinaryOp::Or) {
      const bool lhs = eval(*n.lhs).as_bool();
      if (n.op == BinaryOp::And && !lhs) return Value::boolean(false);
      if (n.op == BinaryOp::Or && lhs) return Value::boolean(true);
      return Value::boolean(eval(*n.rhs).as_bool());
    }
    const Value lhs = eval(*n.lhs);
    const Value rhs = eval(*n.rhs);

    if (lhs.type() == ScalarType::Bool) {
      // Only == and != reach here for Bool operands.
      const bool eq = lhs.as_bool() == rhs.as_bool();
      return Value::boolean(n.op == BinaryOp::Eq ? eq : !eq);
    }

    if (lhs.type() == ScalarType::Int64 && rhs.type() == ScalarType::Int64) {
      return int_op(n.op, lhs.as_int(), rhs.as_int());
    }
    return float_op(n.op, to_double(lhs), to_double(rhs));
  }

  Value int_op(BinaryOp op, std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    switch (op) {
      case BinaryOp::Add:
        if (__builtin_add_overflow(a, b, &r)) overflow("+", a, b);
        return Value::int64(r);
      case BinaryOp::Sub:
        if (__builtin_sub_overflow(a, b, &r)) overflow("-", a, b);
        return Value::int64(r);
      case BinaryOp::Mul:
        if (__builtin_mul_overflow(a, b, &r)) overflow("*", a, b);
        return Value::int64(r);
      case BinaryOp::Div:
        if (b == 0) throw TrapSignal{"integer division by zero in '" + fn_.name + "'"};
        if (a == std::numeric_limits<std::int64_t>::min() && b == -1) overflow("/", a, b);
        return Value::int64(a / b);
      case BinaryOp::Eq: return Value::boolean(a == b);
      case BinaryOp::Ne: return Value::boolean(a != b);
      case BinaryOp::Lt: return Value::boolean(a < b);
      case BinaryOp::Le: return Value::boolean(a <= b);
      case BinaryOp::Gt: return Value::boolean(a > b);
      case BinaryOp::Ge: return Value::boolean(a >= b);
      default: break;
    }
    throw TrapSignal{"invalid integer operator"};
  }

  static Value float_op(BinaryOp op, double a, double b) {
    switch (op) {
      case BinaryOp::Add: return Value::float64(a + b);
      case BinaryOp::Sub: return Value::float64(a - b);
      case BinaryOp::Mul: return Value::float64(a * b);
      case BinaryOp::Div: return Value::float64(a / b);
      case BinaryOp::Eq: return Value::boolean(a == b);
      case BinaryOp::Ne: return Value::boolean(a != b);
      case BinaryOp::Lt: return Value::boolean(a < b);
      case BinaryOp::Le: return Value::boolean(a <= b);
      case BinaryOp::Gt: return Value::boolean(a > b);
      case BinaryOp::Ge: return Value::boolean(a >= b);
      default: break;
    }
    throw TrapSignal{"invalid float operator"};
  }

  [[noreturn]] void overflow(const char* op, std::int64_t a, std::int64_t b) {
    throw TrapSignal{"integer overflow in '" + fn_.name + "': " + std::to_string(a) + " " + op +
                     " " + std::to_string(b)};
  }

  const idl::InterfaceModule& module_;
  const idl::FunctionDecl& fn_;
  std::span<const Value> args_;
};

std::optional<Trap> check_arguments(const idl::FunctionDecl& fn, std::span<const Value> args) {
  if (args.size() != fn.params.size()) {
    return Trap{"function '" + fn.name + "' expects " + std::to_string(fn.params.size()) +
                " argument(s), got " + std::to_string(args.size())};
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].type() != fn.params[i].type) {
      return Trap{"argument " + std::to_string(i) + " of '" + fn.name + "' has type " +
                  std::string(idl::to_string(args[i].type())) + ", expected " +
                  std::string(idl::to_string(fn.params[i].type))};
    }
  }
  return std::nullopt;
}

}  // namespace

Outcome eval_function(const idl::InterfaceModule& module, const idl::FunctionDecl& fn,
                      std::span<const Value> args) {
  if (auto trap = check_arguments(fn, args)) return *trap;
  try {
    auto result = Frame(module, fn, args).run();
    if (auto* v = std::get_if<Value>(&result)) return *v;
    return std::get<ThrownError>(std::move(result));
  } catch (const TrapSignal& t) {
    return Trap{t.message};
  }
}

}  // namespace errbridge::interp
