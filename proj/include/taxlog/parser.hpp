// Copyright 2026 The Taxlog Authors
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

// Reader and printer for the clause text format:
//
//   clause  := term [ ":-" body ] "."
//   body    := literal { "," literal }
//   literal := [ "\+" ] term
//   term    := variable | atom | number | quoted-string
//            | atom "(" term { "," term } ")"
//
// "%" starts a comment running to end of line; whitespace is insignificant
// outside tokens. Double-quoted strings of the shape "YYYY-MM-DD" become
// date literals; any other quoted text is an atom. printed(parse(x))
// re-parses to a structurally identical clause.

#pragma once

#include "taxlog/term.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace taxlog {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::string file, int line, int col)
      : std::runtime_error((file.empty() ? "<input>" : file) + ":" +
                           std::to_string(line) + ":" + std::to_string(col) +
                           ": " + msg),
        file_(std::move(file)), line_(line), col_(col) {}

  const std::string& file() const { return file_; }
  int line() const { return line_; }
  int column() const { return col_; }

private:
  std::string file_;
  int line_, col_;
};

namespace detail {

enum class TokKind {
  Atom, Variable, Integer, Decimal, Quoted,
  LParen, RParen, Comma, Dot, Neck, Naf, End
};

struct Token {
  TokKind kind;
  std::string text;
  int line = 0, col = 0;
};

class Lexer {
public:
  Lexer(std::string_view src, std::string file)
      : src_(src), file_(std::move(file)) {}

  Token next() {
    skip_blank();
    int line = line_, col = col_;
    if (eof()) return {TokKind::End, "", line, col};
    char c = peek();
    if (c == '(') { advance(); return {TokKind::LParen, "(", line, col}; }
    if (c == ')') { advance(); return {TokKind::RParen, ")", line, col}; }
    if (c == ',') { advance(); return {TokKind::Comma, ",", line, col}; }
    if (c == ':') {
      advance();
      if (!eof() && peek() == '-') { advance(); return {TokKind::Neck, ":-", line, col}; }
      fail("expected ':-'", line, col);
    }
    if (c == '\\') {
      advance();
      if (!eof() && peek() == '+') { advance(); return {TokKind::Naf, "\\+", line, col}; }
      fail("expected '\\+'", line, col);
    }
    if (c == '.') {
      // A '.' is a clause terminator unless it sits inside a number,
      // which lex_number consumes on its own.
      advance();
      return {TokKind::Dot, ".", line, col};
    }
    if (c == '\'') return lex_quoted_atom(line, col);
    if (c == '"') return lex_string(line, col);
    if (c == '-' || is_digit(c)) return lex_number(line, col);
    if (is_lower(c)) return lex_name(TokKind::Atom, line, col);
    if (is_upper(c) || c == '_') return lex_name(TokKind::Variable, line, col);
    fail(std::string("unexpected character '") + c + "'", line, col);
  }

  [[noreturn]] void fail(const std::string& msg, int line, int col) const {
    throw ParseError(msg, file_, line, col);
  }
  const std::string& file() const { return file_; }

private:
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
  static bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
  static bool is_ident(char c) {
    return is_digit(c) || is_lower(c) || is_upper(c) || c == '_';
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }
  char peek2() const { return pos_ + 1 < src_.size() ? src_[pos_ + 1] : '\0'; }
  void advance() {
    if (src_[pos_] == '\n') { ++line_; col_ = 1; } else { ++col_; }
    ++pos_;
  }

  void skip_blank() {
    while (!eof()) {
      char c = peek();
      if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Token lex_name(TokKind kind, int line, int col) {
    std::string text;
    while (!eof() && is_ident(peek())) { text.push_back(peek()); advance(); }
    return {kind, text, line, col};
  }

  Token lex_number(int line, int col) {
    std::string text;
    if (peek() == '-') { text.push_back('-'); advance(); }
    if (eof() || !is_digit(peek())) fail("malformed number", line, col);
    while (!eof() && is_digit(peek())) { text.push_back(peek()); advance(); }
    bool decimal = false;
    if (!eof() && peek() == '.' && is_digit(peek2())) {
      decimal = true;
      text.push_back('.');
      advance();
      while (!eof() && is_digit(peek())) { text.push_back(peek()); advance(); }
    }
    return {decimal ? TokKind::Decimal : TokKind::Integer, text, line, col};
  }

  Token lex_quoted_atom(int line, int col) {
    advance();  // opening '
    std::string text;
    while (true) {
      if (eof()) fail("unterminated quoted atom", line, col);
      char c = peek();
      if (c == '\\') {
        advance();
        if (eof()) fail("unterminated escape", line, col);
        text.push_back(peek());
        advance();
      } else if (c == '\'') {
        advance();
        break;
      } else {
        text.push_back(c);
        advance();
      }
    }
    return {TokKind::Atom, text, line, col};
  }

  Token lex_string(int line, int col) {
    advance();  // opening "
    std::string text;
    while (true) {
      if (eof()) fail("unterminated string", line, col);
      char c = peek();
      if (c == '"') { advance(); break; }
      text.push_back(c);
      advance();
    }
    return {TokKind::Quoted, text, line, col};
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace detail

class Parser {
public:
  Parser(std::string_view src, std::string file = "")
      : lexer_(src, std::move(file)) {
    tok_ = lexer_.next();
  }

  std::vector<Clause> parse_program() {
    std::vector<Clause> out;
    while (tok_.kind != detail::TokKind::End) out.push_back(parse_clause());
    return out;
  }

  Clause parse_clause() {
    int line = tok_.line;
    Clause c;
    c.head = parse_term();
    if (!c.head.is_callable())
      lexer_.fail("clause head must be an atom or compound term", line, tok_.col);
    if (tok_.kind == detail::TokKind::Neck) {
      consume();
      c.body = parse_body();
    }
    expect(detail::TokKind::Dot, "expected '.' at end of clause");
    c.origin = SourceLoc{lexer_.file(), line};
    return c;
  }

  // A comma-separated literal sequence, optionally '.'-terminated. Used for
  // queries; the empty conjunction is written as the atom `true`.
  std::vector<Literal> parse_query() {
    std::vector<Literal> body = parse_body();
    if (tok_.kind == detail::TokKind::Dot) consume();
    if (tok_.kind != detail::TokKind::End)
      lexer_.fail("trailing input after query", tok_.line, tok_.col);
    if (body.size() == 1 && !body[0].negated && body[0].goal.is_atom() &&
        body[0].goal.name() == "true")
      return {};
    return body;
  }

  Term parse_term_only() {
    Term t = parse_term();
    if (tok_.kind != detail::TokKind::End)
      lexer_.fail("trailing input after term", tok_.line, tok_.col);
    return t;
  }

private:
  std::vector<Literal> parse_body() {
    std::vector<Literal> body;
    body.push_back(parse_literal());
    while (tok_.kind == detail::TokKind::Comma) {
      consume();
      body.push_back(parse_literal());
    }
    return body;
  }

  Literal parse_literal() {
    bool neg = false;
    if (tok_.kind == detail::TokKind::Naf) {
      neg = true;
      consume();
    }
    int line = tok_.line, col = tok_.col;
    Term goal = parse_term();
    if (!goal.is_callable())
      lexer_.fail("literal must be an atom or compound term", line, col);
    return Literal{std::move(goal), neg};
  }

  Term parse_term() {
    using detail::TokKind;
    switch (tok_.kind) {
      case TokKind::Variable: {
        std::string name = tok_.text;
        consume();
        if (name == "_") name = "_G" + std::to_string(++anon_counter_);
        return Term::variable(name);
      }
      case TokKind::Integer: {
        Term t = Term::number(Decimal::parse(tok_.text));
        consume();
        return t;
      }
      case TokKind::Decimal: {
        Term t = Term::number(Decimal::parse(tok_.text));
        consume();
        return t;
      }
      case TokKind::Quoted: {
        std::string text = tok_.text;
        int line = tok_.line, col = tok_.col;
        consume();
        if (calendar::looks_like_date(text)) {
          try {
            return Term::date(calendar::parse_date(text));
          } catch (const CalendarError& e) {
            lexer_.fail(e.what(), line, col);
          }
        }
        return Term::atom(text);
      }
      case TokKind::Atom: {
        std::string name = tok_.text;
        int line = tok_.line, col = tok_.col;
        consume();
        if (tok_.kind == TokKind::LParen) {
          consume();
          if (tok_.kind == TokKind::RParen)
            lexer_.fail("compound term with zero arguments", line, col);
          TermList args;
          args.push_back(parse_term());
          while (tok_.kind == TokKind::Comma) {
            consume();
            args.push_back(parse_term());
          }
          expect(TokKind::RParen, "expected ')' in argument list");
          return Term::compound(std::move(name), std::move(args));
        }
        return Term::atom(std::move(name));
      }
      case TokKind::End:
        lexer_.fail("unexpected end of input (unterminated clause?)", tok_.line, tok_.col);
      default:
        lexer_.fail("unexpected token '" + tok_.text + "'", tok_.line, tok_.col);
    }
  }

  void consume() { tok_ = lexer_.next(); }
  void expect(detail::TokKind kind, const std::string& msg) {
    if (tok_.kind != kind) lexer_.fail(msg, tok_.line, tok_.col);
    consume();
  }

  detail::Lexer lexer_;
  detail::Token tok_;
  unsigned long anon_counter_ = 0;
};

inline std::vector<Clause> parse_program(std::string_view text, std::string file = "") {
  return Parser(text, std::move(file)).parse_program();
}
inline std::vector<Literal> parse_query(std::string_view text, std::string file = "") {
  return Parser(text, std::move(file)).parse_query();
}
inline Term parse_term(std::string_view text) {
  return Parser(text).parse_term_only();
}

// ---------------------------------------------------------------------------
// Printing. The canonical form round-trips through the parser.

inline bool needs_quotes(const std::string& name) {
  if (name.empty()) return true;
  if (!(name[0] >= 'a' && name[0] <= 'z')) return true;
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return true;
  }
  return false;
}

inline void print_term(std::ostream& os, const Term& t) {
  switch (t.kind()) {
    case TermKind::Variable:
      os << t.name();
      break;
    case TermKind::Atom:
      if (needs_quotes(t.name())) {
        os << '\'';
        for (char c : t.name()) {
          if (c == '\'' || c == '\\') os << '\\';
          os << c;
        }
        os << '\'';
      } else {
        os << t.name();
      }
      break;
    case TermKind::Integer:
    case TermKind::Decimal:
      os << t.number().str();
      break;
    case TermKind::Date:
      os << '"' << calendar::format_date(t.date()) << '"';
      break;
    case TermKind::Compound: {
      if (needs_quotes(t.name())) {
        os << '\'';
        for (char c : t.name()) {
          if (c == '\'' || c == '\\') os << '\\';
          os << c;
        }
        os << '\'';
      } else {
        os << t.name();
      }
      os << '(';
      for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) os << ", ";
        print_term(os, t.args()[i]);
      }
      os << ')';
      break;
    }
  }
}

inline std::string to_string(const Term& t) {
  std::ostringstream os;
  print_term(os, t);
  return os.str();
}

inline void print_literal(std::ostream& os, const Literal& l) {
  if (l.negated) os << "\\+ ";
  print_term(os, l.goal);
}

inline std::string to_string(const Literal& l) {
  std::ostringstream os;
  print_literal(os, l);
  return os.str();
}

inline void print_clause(std::ostream& os, const Clause& c) {
  print_term(os, c.head);
  if (!c.body.empty()) {
    os << " :- ";
    for (std::size_t i = 0; i < c.body.size(); ++i) {
      if (i) os << ", ";
      print_literal(os, c.body[i]);
    }
  }
  os << '.';
}

inline std::string to_string(const Clause& c) {
  std::ostringstream os;
  print_clause(os, c);
  return os.str();
}

inline std::string to_string(const std::vector<Literal>& query) {
  if (query.empty()) return "true";
  std::ostringstream os;
  for (std::size_t i = 0; i < query.size(); ++i) {
    if (i) os << ", ";
    print_literal(os, query[i]);
  }
  return os.str();
}

}  // namespace taxlog
