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

#include "idl/parser.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>
#include <string>
#include <utility>

namespace errbridge::idl {

namespace {

struct SyntaxError {
  Diagnostic diag;
};

class Parser {
 public:
  explicit Parser(std::span<const Token> tokens) : tokens_(tokens) {}

  ParseResult run() {
    InterfaceModule module;
    try {
      const Token& kw = expect(TokenKind::KwModule, "at start of file");
      module.pos = pos_of(kw);
      module.name = expect(TokenKind::Ident, "after 'module'").text;
    } catch (const SyntaxError& e) {
      return Diagnostics{e.diag};
    }

    Diagnostics diags;
    while (!at_end()) {
      try {
        if (check(TokenKind::KwEnum)) {
          module.enums.push_back(parse_enum());
        } else if (check(TokenKind::KwFunc)) {
          module.functions.push_back(parse_function());
        } else {
          fail("expected 'enum' or 'func'");
        }
      } catch (const SyntaxError& e) {
        diags.push_back(e.diag);
        synchronize();
      }
    }
    if (!diags.empty()) return diags;
    return module;
  }

 private:
  bool at_end() const { return index_ >= tokens_.size(); }

  const Token* peek(std::size_t ahead = 0) const {
    return index_ + ahead < tokens_.size() ? &tokens_[index_ + ahead] : nullptr;
  }

  bool check(TokenKind kind, std::size_t ahead = 0) const {
    const Token* t = peek(ahead);
    return t != nullptr && t->kind == kind;
  }

  bool match(TokenKind kind) {
    if (!check(kind)) return false;
    ++index_;
    return true;
  }

  static SourcePos pos_of(const Token& t) { return {t.line, t.column}; }

  [[noreturn]] void fail(const std::string& expected) const {
    Diagnostic d;
    d.code = std::string(code::kSyntax);
    if (const Token* t = peek()) {
      d.line = t->line;
      d.column = t->column;
      d.message = expected + ", found " + std::string(to_string(t->kind));
      if (t->kind == TokenKind::Ident) d.message += " '" + t->text + "'";
    } else {
      if (!tokens_.empty()) {
        const Token& last = tokens_.back();
        d.line = last.line;
        d.column = last.column + static_cast<int>(last.text.size());
      }
      d.message = expected + ", found end of input";
    }
    throw SyntaxError{std::move(d)};
  }

  const Token& expect(TokenKind kind, std::string_view context) {
    if (!check(kind)) {
      fail("expected " + std::string(to_string(kind)) + " " + std::string(context));
    }
    return tokens_[index_++];
  }

  // Skip to the next top-level declaration keyword.
  void synchronize() {
    if (!at_end()) ++index_;
    while (!at_end() && !check(TokenKind::KwEnum) && !check(TokenKind::KwFunc)) ++index_;
  }

  ErrorEnumDecl parse_enum() {
    ErrorEnumDecl decl;
    decl.pos = pos_of(expect(TokenKind::KwEnum, ""));
    decl.name = expect(TokenKind::Ident, "after 'enum'").text;
    expect(TokenKind::Colon, "after enum name");
    const Token* proto = peek();
    if (proto == nullptr || proto->kind != TokenKind::Ident || proto->text != "Error") {
      fail("expected 'Error' conformance");
    }
    ++index_;
    expect(TokenKind::LBrace, "to open enum body");
    do {
      expect(TokenKind::KwCase, "in enum body");
      do {
        const Token& c = expect(TokenKind::Ident, "after 'case'");
        decl.cases.push_back(c.text);
        decl.case_pos.push_back(pos_of(c));
      } while (match(TokenKind::Comma));
    } while (check(TokenKind::KwCase));
    expect(TokenKind::RBrace, "to close enum body");
    return decl;
  }

  ScalarType parse_type(bool allow_unit) {
    const Token* t = peek();
    if (t != nullptr && t->kind == TokenKind::Ident) {
      const std::string& n = t->text;
      std::optional<ScalarType> type;
      if (n == "Int" || n == "Int64") type = ScalarType::Int64;
      if (n == "Float" || n == "Float64" || n == "Double") type = ScalarType::Float64;
      if (n == "Bool") type = ScalarType::Bool;
      if (allow_unit && (n == "Void" || n == "Unit")) type = ScalarType::Unit;
      if (type) {
        ++index_;
        return *type;
      }
    }
    fail(allow_unit ? "expected a type (Int, Float, Bool, Void)"
                    : "expected a parameter type (Int, Float, Bool)");
  }

  FunctionDecl parse_function() {
    FunctionDecl fn;
    fn.pos = pos_of(expect(TokenKind::KwFunc, ""));
    fn.name = expect(TokenKind::Ident, "after 'func'").text;
    expect(TokenKind::LParen, "to open parameter list");
    if (!check(TokenKind::RParen)) {
      do {
        // `_ name: Type` as in Swift; the external label is dropped.
        if (check(TokenKind::Ident) && peek()->text == "_" && check(TokenKind::Ident, 1)) {
          ++index_;
        }
        Param p;
        const Token& name = expect(TokenKind::Ident, "as parameter name");
        p.name = name.text;
        p.pos = pos_of(name);
        expect(TokenKind::Colon, "after parameter name");
        p.type = parse_type(false);
        fn.params.push_back(std::move(p));
      } while (match(TokenKind::Comma));
    }
    expect(TokenKind::RParen, "to close parameter list");
    fn.throws = match(TokenKind::KwThrows);
    if (match(TokenKind::Arrow)) fn.return_type = parse_type(true);
    fn.body = parse_block();
    return fn;
  }

  Block parse_block() {
    expect(TokenKind::LBrace, "to open block");
    Block block;
    while (!check(TokenKind::RBrace)) {
      if (at_end()) fail("expected '}' to close block");
      block.push_back(parse_stmt());
    }
    ++index_;
    return block;
  }

  Stmt parse_stmt() {
    const Token* t = peek();
    Stmt stmt;
    stmt.pos = pos_of(*t);
    switch (t->kind) {
      case TokenKind::KwIf:
        stmt.node = parse_if();
        return stmt;
      case TokenKind::KwReturn: {
        ++index_;
        Return r;
        if (!check(TokenKind::RBrace)) r.value = parse_expr();
        stmt.node = std::move(r);
        return stmt;
      }
      case TokenKind::KwThrow: {
        ++index_;
        Throw th;
        th.enum_name = expect(TokenKind::Ident, "after 'throw'").text;
        expect(TokenKind::Dot, "between error enum and case");
        const Token& c = expect(TokenKind::Ident, "as error case");
        th.case_name = c.text;
        th.case_pos = pos_of(c);
        stmt.node = std::move(th);
        return stmt;
      }
      default:
        fail("expected a statement ('if', 'return' or 'throw')");
    }
  }

  If parse_if() {
    expect(TokenKind::KwIf, "");
    If node;
    node.cond = parse_expr();
    node.then_block = parse_block();
    if (match(TokenKind::KwElse)) {
      if (check(TokenKind::KwIf)) {
        Stmt nested;
        nested.pos = pos_of(*peek());
        nested.node = parse_if();
        node.else_block.push_back(std::move(nested));
      } else {
        node.else_block = parse_block();
      }
    }
    return node;
  }

  // Precedence climbing, loosest first.
  ExprPtr parse_expr() { return parse_or(); }

  ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs, SourcePos pos) {
    auto e = std::make_unique<Expr>();
    e->pos = pos;
    e->node = Binary{op, std::move(lhs), std::move(rhs)};
    return e;
  }

  template <typename Next>
  ExprPtr parse_level(Next next, std::initializer_list<std::pair<TokenKind, BinaryOp>> ops) {
    ExprPtr lhs = (this->*next)();
    while (true) {
      const Token* t = peek();
      if (t == nullptr) return lhs;
      bool matched = false;
      for (const auto& [kind, op] : ops) {
        if (t->kind == kind) {
          ++index_;
          ExprPtr rhs = (this->*next)();
          lhs = make_binary(op, std::move(lhs), std::move(rhs), pos_of(*t));
          matched = true;
          break;
        }
      }
      if (!matched) return lhs;
    }
  }

  ExprPtr parse_or() { return parse_level(&Parser::parse_and, {{TokenKind::OrOr, BinaryOp::Or}}); }
  ExprPtr parse_and() {
    return parse_level(&Parser::parse_equality, {{TokenKind::AndAnd, BinaryOp::And}});
  }
  ExprPtr parse_equality() {
    return parse_level(&Parser::parse_relational,
                       {{TokenKind::EqEq, BinaryOp::Eq}, {TokenKind::NotEq, BinaryOp::Ne}});
  }
  ExprPtr parse_relational() {
    return parse_level(&Parser::parse_additive,
                       {{TokenKind::Less, BinaryOp::Lt},
                        {TokenKind::LessEq, BinaryOp::Le},
                        {TokenKind::Greater, BinaryOp::Gt},
                        {TokenKind::GreaterEq, BinaryOp::Ge}});
  }
  ExprPtr parse_additive() {
    return parse_level(&Parser::parse_multiplicative,
                       {{TokenKind::Plus, BinaryOp::Add}, {TokenKind::Minus, BinaryOp::Sub}});
  }
  ExprPtr parse_multiplicative() {
    return parse_level(&Parser::parse_unary,
                       {{TokenKind::Star, BinaryOp::Mul}, {TokenKind::Slash, BinaryOp::Div}});
  }

  ExprPtr parse_unary() {
    if (check(TokenKind::Minus)) {
      const Token& minus = tokens_[index_++];
      if (check(TokenKind::IntLiteral) || check(TokenKind::FloatLiteral)) {
        return parse_literal(/*negate=*/true, pos_of(minus));
      }
      auto zero = std::make_unique<Expr>();
      zero->pos = pos_of(minus);
      zero->node = IntLit{0};
      return make_binary(BinaryOp::Sub, std::move(zero), parse_unary(), pos_of(minus));
    }
    return parse_primary();
  }

  ExprPtr parse_literal(bool negate, SourcePos pos) {
    const Token& t = tokens_[index_++];
    auto e = std::make_unique<Expr>();
    e->pos = pos;
    if (t.kind == TokenKind::FloatLiteral) {
      double value = std::strtod(t.text.c_str(), nullptr);
      e->node = FloatLit{negate ? -value : value};
      return e;
    }
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), magnitude);
    const std::uint64_t limit =
        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + (negate ? 1 : 0);
    if (ec != std::errc() || magnitude > limit) {
      --index_;
      Diagnostic d;
      d.code = std::string(code::kSyntax);
      d.line = t.line;
      d.column = t.column;
      d.message = "integer literal '" + t.text + "' is out of range for Int64";
      throw SyntaxError{std::move(d)};
    }
    e->node = IntLit{negate ? static_cast<std::int64_t>(0 - magnitude)
                            : static_cast<std::int64_t>(magnitude)};
    return e;
  }

  ExprPtr parse_primary() {
    const Token* t = peek();
    if (t == nullptr) fail("expected an expression");
    switch (t->kind) {
      case TokenKind::IntLiteral:
      case TokenKind::FloatLiteral:
        return parse_literal(false, pos_of(*t));
      case TokenKind::KwTrue:
      case TokenKind::KwFalse: {
        auto e = std::make_unique<Expr>();
        e->pos = pos_of(*t);
        e->node = BoolLit{t->kind == TokenKind::KwTrue};
        ++index_;
        return e;
      }
      case TokenKind::LParen: {
        ++index_;
        ExprPtr inner = parse_expr();
        expect(TokenKind::RParen, "to close parenthesized expression");
        return inner;
      }
      case TokenKind::Ident: {
        auto e = std::make_unique<Expr>();
        e->pos = pos_of(*t);
        ++index_;
        if ((t->text == "Float" || t->text == "Double") && check(TokenKind::LParen)) {
          ++index_;
          ExprPtr operand = parse_expr();
          expect(TokenKind::RParen, "to close Float(...)");
          e->node = FloatCast{std::move(operand)};
        } else {
          e->node = ParamRef{t->text};
        }
        return e;
      }
      default:
        fail("expected an expression");
    }
  }

  std::span<const Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

ParseResult parse(std::span<const Token> tokens) { return Parser(tokens).run(); }

}  // namespace errbridge::idl
