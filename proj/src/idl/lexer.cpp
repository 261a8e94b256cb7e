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

#include "idl/lexer.hpp"

#include <array>
#include <optional>
#include <utility>

namespace errbridge::idl {

namespace {

constexpr std::array<std::pair<std::string_view, TokenKind>, 11> kKeywords = {{
    {"module", TokenKind::KwModule},
    {"enum", TokenKind::KwEnum},
    {"case", TokenKind::KwCase},
    {"func", TokenKind::KwFunc},
    {"throws", TokenKind::KwThrows},
    {"if", TokenKind::KwIf},
    {"else", TokenKind::KwElse},
    {"return", TokenKind::KwReturn},
    {"throw", TokenKind::KwThrow},
    {"true", TokenKind::KwTrue},
    {"false", TokenKind::KwFalse},
}};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  LexResult run() {
    std::vector<Token> tokens;
    while (true) {
      skip_trivia();
      if (at_end()) break;
      const int line = line_;
      const int column = column_;
      const char c = peek();

      if (is_ident_start(c)) {
        std::size_t start = pos_;
        while (!at_end() && is_ident_char(peek())) advance();
        std::string text(src_.substr(start, pos_ - start));
        TokenKind kind = TokenKind::Ident;
        for (const auto& [word, kw] : kKeywords) {
          if (word == text) kind = kw;
        }
        tokens.push_back({kind, std::move(text), line, column});
        continue;
      }

      if (is_digit(c)) {
        std::size_t start = pos_;
        while (!at_end() && is_digit(peek())) advance();
        TokenKind kind = TokenKind::IntLiteral;
        if (peek() == '.' && is_digit(peek(1))) {
          kind = TokenKind::FloatLiteral;
          advance();
          while (!at_end() && is_digit(peek())) advance();
        }
        tokens.push_back({kind, std::string(src_.substr(start, pos_ - start)), line, column});
        continue;
      }

      if (auto kind = two_char_operator()) {
        tokens.push_back({*kind, std::string(src_.substr(pos_, 2)), line, column});
        advance();
        advance();
        continue;
      }
      if (auto kind = single_char_operator(c)) {
        tokens.push_back({*kind, std::string(1, c), line, column});
        advance();
        continue;
      }

      Diagnostic d;
      d.line = line;
      d.column = column;
      d.code = std::string(code::kUnknownCharacter);
      d.message = "unknown character '" + std::string(current_codepoint()) + "'";
      return Diagnostics{std::move(d)};
    }
    return tokens;
  }

 private:
  bool at_end() const { return pos_ >= src_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  // Columns count code points, so UTF-8 continuation bytes do not advance.
  void advance() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
      ++column_;
    }
  }

  std::string_view current_codepoint() const {
    std::size_t len = 1;
    while (pos_ + len < src_.size() &&
           (static_cast<unsigned char>(src_[pos_ + len]) & 0xC0) == 0x80) {
      ++len;
    }
    return src_.substr(pos_, len);
  }

  void skip_trivia() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        return;
      }
    }
  }

  std::optional<TokenKind> two_char_operator() const {
    const char a = peek();
    const char b = peek(1);
    if (a == '-' && b == '>') return TokenKind::Arrow;
    if (a == '=' && b == '=') return TokenKind::EqEq;
    if (a == '!' && b == '=') return TokenKind::NotEq;
    if (a == '<' && b == '=') return TokenKind::LessEq;
    if (a == '>' && b == '=') return TokenKind::GreaterEq;
    if (a == '&' && b == '&') return TokenKind::AndAnd;
    if (a == '|' && b == '|') return TokenKind::OrOr;
    return std::nullopt;
  }

  static std::optional<TokenKind> single_char_operator(char c) {
    switch (c) {
      case '(': return TokenKind::LParen;
      case ')': return TokenKind::RParen;
      case '{': return TokenKind::LBrace;
      case '}': return TokenKind::RBrace;
      case ':': return TokenKind::Colon;
      case ',': return TokenKind::Comma;
      case '.': return TokenKind::Dot;
      case '+': return TokenKind::Plus;
      case '-': return TokenKind::Minus;
      case '*': return TokenKind::Star;
      case '/': return TokenKind::Slash;
      case '<': return TokenKind::Less;
      case '>': return TokenKind::Greater;
      default: return std::nullopt;
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwModule: return "'module'";
    case TokenKind::KwEnum: return "'enum'";
    case TokenKind::KwCase: return "'case'";
    case TokenKind::KwFunc: return "'func'";
    case TokenKind::KwThrows: return "'throws'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwElse: return "'else'";
    case TokenKind::KwReturn: return "'return'";
    case TokenKind::KwThrow: return "'throw'";
    case TokenKind::KwTrue: return "'true'";
    case TokenKind::KwFalse: return "'false'";
    case TokenKind::Ident: return "identifier";
    case TokenKind::IntLiteral: return "integer literal";
    case TokenKind::FloatLiteral: return "float literal";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Colon: return "':'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::Arrow: return "'->'";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::EqEq: return "'=='";
    case TokenKind::NotEq: return "'!='";
    case TokenKind::Less: return "'<'";
    case TokenKind::LessEq: return "'<='";
    case TokenKind::Greater: return "'>'";
    case TokenKind::GreaterEq: return "'>='";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::OrOr: return "'||'";
  }
  return "token";
}

LexResult tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace errbridge::idl
