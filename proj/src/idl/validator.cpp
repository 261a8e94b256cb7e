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

#include "idl/validator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "idl/lexer.hpp"
#include "idl/parser.hpp"

namespace errbridge::idl {

namespace {

bool is_numeric(ScalarType t) { return t == ScalarType::Int64 || t == ScalarType::Float64; }

class Validator {
 public:
  explicit Validator(InterfaceModule& module) : module_(module) {}

  Diagnostics run() {
    check_duplicates();
    for (auto& fn : module_.functions) check_function(fn);
    return std::move(diags_);
  }

 private:
  void report(Severity severity, std::string_view code, SourcePos pos, std::string message) {
    Diagnostic d;
    d.severity = severity;
    d.code = std::string(code);
    d.line = std::max(pos.line, 1);
    d.column = std::max(pos.column, 1);
    d.message = std::move(message);
    diags_.push_back(std::move(d));
  }

  void error(std::string_view code, SourcePos pos, std::string message) {
    report(Severity::Error, code, pos, std::move(message));
  }

  void check_duplicates() {
    // Enums and functions share one namespace in the generated header.
    std::set<std::string> seen;
    for (const auto& e : module_.enums) {
      if (!seen.insert(e.name).second) {
        error(code::kDuplicateName, e.pos, "duplicate declaration '" + e.name + "'");
      }
      if (e.cases.empty()) {
        error(code::kSyntax, e.pos, "enum '" + e.name + "' declares no cases");
      }
      std::set<std::string> cases;
      for (std::size_t i = 0; i < e.cases.size(); ++i) {
        if (!cases.insert(e.cases[i]).second) {
          SourcePos pos = i < e.case_pos.size() ? e.case_pos[i] : e.pos;
          error(code::kDuplicateName, pos,
                "duplicate case '" + e.cases[i] + "' in enum '" + e.name + "'");
        }
      }
    }
    for (const auto& fn : module_.functions) {
      if (!seen.insert(fn.name).second) {
        error(code::kDuplicateName, fn.pos, "duplicate declaration '" + fn.name + "'");
      }
      std::set<std::string> params;
      for (const auto& p : fn.params) {
        if (!params.insert(p.name).second) {
          error(code::kDuplicateName, p.pos,
                "duplicate parameter '" + p.name + "' in function '" + fn.name + "'");
        }
        if (p.type == ScalarType::Unit) {
          error(code::kTypeMismatch, p.pos, "parameter '" + p.name + "' cannot have type Unit");
        }
      }
    }
  }

  void check_function(FunctionDecl& fn) {
    fn_ = &fn;
    const bool terminates = check_block(fn.body);
    if (!terminates && fn.return_type != ScalarType::Unit) {
      error(code::kMissingReturn, fn.pos,
            "function '" + fn.name + "' does not return a value on every path");
    }
  }

  // Returns true when every path through the block ends in return or throw.
  bool check_block(Block& block) {
    bool terminated = false;
    bool warned = false;
    for (auto& stmt : block) {
      if (terminated && !warned) {
        report(Severity::Warning, code::kUnreachable, stmt.pos, "statement is never executed");
        warned = true;
      }
      if (check_stmt(stmt)) terminated = true;
    }
    return terminated;
  }

  bool check_stmt(Stmt& stmt) {
    if (auto* s = std::get_if<If>(&stmt.node)) {
      auto cond = check_expr(*s->cond);
      if (cond && *cond != ScalarType::Bool) {
        error(code::kTypeMismatch, s->cond->pos,
              "condition has type " + std::string(to_string(*cond)) + ", expected Bool");
      }
      const bool then_terminates = check_block(s->then_block);
      const bool else_terminates = check_block(s->else_block);
      return then_terminates && else_terminates;
    }
    if (auto* s = std::get_if<Return>(&stmt.node)) {
      check_return(*s, stmt.pos);
      return true;
    }
    check_throw(std::get<Throw>(stmt.node), stmt.pos);
    return true;
  }

  void check_return(Return& ret, SourcePos pos) {
    const ScalarType expected = fn_->return_type;
    if (!ret.value) {
      if (expected != ScalarType::Unit) {
        error(code::kTypeMismatch, pos,
              "missing return value of type " + std::string(to_string(expected)));
      }
      return;
    }
    auto actual = check_expr(*ret.value);
    if (expected == ScalarType::Unit) {
      error(code::kTypeMismatch, ret.value->pos,
            "function '" + fn_->name + "' returns Unit but a value is returned");
      return;
    }
    if (!actual) return;
    const bool converts = *actual == ScalarType::Int64 && expected == ScalarType::Float64;
    if (*actual != expected && !converts) {
      error(code::kTypeMismatch, ret.value->pos,
            "returning " + std::string(to_string(*actual)) + " from function '" + fn_->name +
                "' with return type " + std::string(to_string(expected)));
    }
  }

  void check_throw(const Throw& th, SourcePos pos) {
    const ErrorEnumDecl* e = module_.find_enum(th.enum_name);
    if (e == nullptr) {
      error(code::kUnknownEnumOrCase, pos, "unknown error enum '" + th.enum_name + "'");
    } else if (e->case_index(th.case_name) < 0) {
      error(code::kUnknownEnumOrCase, th.case_pos.line ? th.case_pos : pos,
            "enum '" + th.enum_name + "' has no case '" + th.case_name + "'");
    }
    if (!fn_->throws) {
      error(code::kThrowInNonThrowing, pos,
            "'throw' in function '" + fn_->name + "' which is not declared 'throws'");
    }
  }

  std::optional<ScalarType> check_expr(Expr& expr) {
    expr.type = std::visit([&](auto& node) { return type_of(node, expr.pos); }, expr.node);
    return expr.type;
  }

  std::optional<ScalarType> type_of(IntLit&, SourcePos) { return ScalarType::Int64; }
  std::optional<ScalarType> type_of(FloatLit&, SourcePos) { return ScalarType::Float64; }
  std::optional<ScalarType> type_of(BoolLit&, SourcePos) { return ScalarType::Bool; }

  std::optional<ScalarType> type_of(ParamRef& ref, SourcePos pos) {
    for (const auto& p : fn_->params) {
      if (p.name == ref.name) return p.type;
    }
    error(code::kUnknownName, pos, "unknown name '" + ref.name + "'");
    return std::nullopt;
  }

  std::optional<ScalarType> type_of(FloatCast& cast, SourcePos pos) {
    auto operand = check_expr(*cast.operand);
    if (!operand) return ScalarType::Float64;
    if (!is_numeric(*operand)) {
      error(code::kTypeMismatch, pos,
            "cannot convert " + std::string(to_string(*operand)) + " to Float64");
    }
    return ScalarType::Float64;
  }

  std::optional<ScalarType> type_of(Binary& bin, SourcePos pos) {
    auto lhs = check_expr(*bin.lhs);
    auto rhs = check_expr(*bin.rhs);
    const std::string op(to_string(bin.op));
    auto mismatch = [&]() -> std::optional<ScalarType> {
      error(code::kTypeMismatch, pos,
            "operator '" + op + "' cannot be applied to " + std::string(to_string(*lhs)) +
                " and " + std::string(to_string(*rhs)));
      return std::nullopt;
    };

    if (is_logical(bin.op)) {
      if (lhs && rhs && (*lhs != ScalarType::Bool || *rhs != ScalarType::Bool)) return mismatch();
      return ScalarType::Bool;
    }
    if (is_comparison(bin.op)) {
      if (!lhs || !rhs) return ScalarType::Bool;
      const bool both_numeric = is_numeric(*lhs) && is_numeric(*rhs);
      const bool both_bool = *lhs == ScalarType::Bool && *rhs == ScalarType::Bool;
      const bool equality = bin.op == BinaryOp::Eq || bin.op == BinaryOp::Ne;
      if (!both_numeric && !(equality && both_bool)) return mismatch();
      return ScalarType::Bool;
    }
    // Arithmetic; mixed Int64/Float64 promotes to Float64.
    if (!lhs || !rhs) return std::nullopt;
    if (!is_numeric(*lhs) || !is_numeric(*rhs)) return mismatch();
    if (*lhs == ScalarType::Int64 && *rhs == ScalarType::Int64) return ScalarType::Int64;
    return ScalarType::Float64;
  }

  InterfaceModule& module_;
  const FunctionDecl* fn_ = nullptr;
  Diagnostics diags_;
};

}  // namespace

ValidateResult validate(InterfaceModule module) {
  Diagnostics diags = Validator(module).run();
  if (has_errors(diags)) return diags;
  return ValidatedModule(std::move(module), std::move(diags));
}

ValidateResult compile_source(std::string_view source) {
  auto lexed = tokenize(source);
  if (auto* diags = std::get_if<Diagnostics>(&lexed)) return std::move(*diags);
  auto parsed = parse(std::get<std::vector<Token>>(lexed));
  if (auto* diags = std::get_if<Diagnostics>(&parsed)) return std::move(*diags);
  return validate(std::move(std::get<InterfaceModule>(parsed)));
}

}  // namespace errbridge::idl
