// Copyright 2026 The rbim Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "rbim/parser.h"

#include <string>
#include <utility>
#include <vector>

#include "rbim/errors.h"

namespace rbim {

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
            message),
      line_(line),
      column_(column),
      detail_(message) {}

namespace {

enum class TokenKind { kIdentifier, kBang, kComma, kArrow, kDot, kEnd };

struct Token {
  TokenKind kind;
  std::string_view text;
  std::size_t line;
  std::size_t column;
};

std::string Describe(const Token& token) {
  switch (token.kind) {
    case TokenKind::kIdentifier:
      return "identifier '" + std::string(token.text) + "'";
    case TokenKind::kEnd:
      return "end of input";
    default:
      return "'" + std::string(token.text) + "'";
  }
}

bool IsIdentifierStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentifierChar(char c) {
  return IsIdentifierStart(c) || (c >= '0' && c <= '9');
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token Next() {
    SkipBlanks();
    const std::size_t line = line_;
    const std::size_t column = column_;
    if (pos_ >= text_.size()) return {TokenKind::kEnd, {}, line, column};
    const char c = text_[pos_];
    if (IsIdentifierStart(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && IsIdentifierChar(text_[pos_])) Advance();
      return {TokenKind::kIdentifier, text_.substr(start, pos_ - start), line,
              column};
    }
    switch (c) {
      case '!':
        Advance();
        return {TokenKind::kBang, text_.substr(pos_ - 1, 1), line, column};
      case ',':
        Advance();
        return {TokenKind::kComma, text_.substr(pos_ - 1, 1), line, column};
      case '.':
        Advance();
        return {TokenKind::kDot, text_.substr(pos_ - 1, 1), line, column};
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          Advance();
          Advance();
          return {TokenKind::kArrow, text_.substr(pos_ - 2, 2), line, column};
        }
        throw ParseError(line, column, "expected '->' after '-'");
      default:
        break;
    }
    std::string shown = (static_cast<unsigned char>(c) < 0x20 ||
                         static_cast<unsigned char>(c) >= 0x7f)
                            ? "byte 0x" + Hex(static_cast<unsigned char>(c))
                            : "'" + std::string(1, c) + "'";
    throw ParseError(line, column, "unexpected character " + shown);
  }

 private:
  static std::string Hex(unsigned char c) {
    static constexpr char kDigits[] = "0123456789abcdef";
    return {kDigits[c >> 4], kDigits[c & 15]};
  }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipBlanks() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        Advance();
      } else if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') Advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Shift(); }

  std::vector<Rule> ParseFile() {
    std::vector<Rule> rules;
    while (current_.kind != TokenKind::kEnd) rules.push_back(ParseStatement());
    return rules;
  }

  Rule ParseSingle() {
    Rule rule = ParseStatement();
    if (current_.kind != TokenKind::kEnd) Fail("end of input");
    return rule;
  }

 private:
  void Shift() { current_ = lexer_.Next(); }

  [[noreturn]] void Fail(const std::string& expected) {
    throw ParseError(current_.line, current_.column,
                     "expected " + expected + ", found " + Describe(current_));
  }

  Literal ParseLiteral() {
    bool positive = true;
    if (current_.kind == TokenKind::kBang) {
      positive = false;
      Shift();
    }
    if (current_.kind != TokenKind::kIdentifier) {
      Fail(positive ? "literal" : "identifier after '!'");
    }
    Literal literal(Atom(std::string(current_.text)), positive);
    Shift();
    return literal;
  }

  Rule ParseStatement() {
    std::vector<Literal> literals;
    literals.push_back(ParseLiteral());
    if (current_.kind == TokenKind::kDot) {
      Shift();
      return Rule::Fact(std::move(literals.front()));
    }
    while (current_.kind == TokenKind::kComma) {
      Shift();
      literals.push_back(ParseLiteral());
    }
    if (current_.kind != TokenKind::kArrow) {
      Fail(literals.size() == 1 ? "'.', ',' or '->'" : "',' or '->'");
    }
    Shift();
    Literal head = ParseLiteral();
    if (current_.kind != TokenKind::kDot) Fail("'.'");
    Shift();
    return Rule(std::move(literals), std::move(head));
  }

  Lexer lexer_;
  Token current_{TokenKind::kEnd, {}, 1, 1};
};

}  // namespace

RuleBase ParseRuleBase(std::string_view text) {
  return RuleBase(Parser(text).ParseFile());
}

Rule ParseRule(std::string_view text) { return Parser(text).ParseSingle(); }

std::string FormatRuleBase(const RuleBase& base) {
  std::string out;
  for (const Rule& rule : base) {
    out += rule.ToString();
    out += '\n';
  }
  return out;
}

}  // namespace rbim
