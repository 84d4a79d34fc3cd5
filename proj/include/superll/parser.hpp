#pragma once

#include <cctype>
#include <string_view>

#include "sequent.hpp"

namespace superll {

namespace detail {

// Recursive-descent parser for the formula surface grammar:
//
//   formula := addend (('*'|'|') addend)*     no mixing without parentheses
//   addend  := unary (('&'|'+') unary)*       same rule
//   unary   := ('!' IDENT | '?' IDENT)* primary
//   primary := IDENT '^'? | '1' | '0' | 'T' | 'F' | '(' formula ')'
//
// IDENT is [A-Za-z][A-Za-z0-9_]*'*; trailing primes let instance files use
// names like e'.
class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse_formula() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

  Sequent parse_sequent() {
    skip_ws();
    if (text_.compare(pos_, 2, "|-") == 0) pos_ += 2;
    skip_ws();
    Sequent g;
    if (pos_ == text_.size()) return g;
    g.push_back(formula());
    skip_ws();
    while (pos_ < text_.size() && text_[pos_] == ',') {
      ++pos_;
      g.push_back(formula());
      skip_ws();
    }
    if (pos_ != text_.size()) fail("trailing input after sequent");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() ||
        !std::isalpha(static_cast<unsigned char>(text_[pos_])))
      fail("expected identifier");
    std::size_t start = pos_;
    ++pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    while (pos_ < text_.size() && text_[pos_] == '\'') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Formula formula() {
    Formula f = addend();
    char op = peek();
    if (op != '*' && op != '|') return f;
    while (true) {
      char next = peek();
      if (next != '*' && next != '|') break;
      if (next != op) fail("mixing '*' and '|' requires parentheses");
      ++pos_;
      Formula rhs = addend();
      f = op == '*' ? Formula::tensor(f, rhs) : Formula::parr(f, rhs);
    }
    return f;
  }

  Formula addend() {
    Formula f = unary();
    char op = peek();
    if (op != '&' && op != '+') return f;
    while (true) {
      char next = peek();
      if (next != '&' && next != '+') break;
      if (next != op) fail("mixing '&' and '+' requires parentheses");
      ++pos_;
      Formula rhs = unary();
      f = op == '&' ? Formula::with(f, rhs) : Formula::plus(f, rhs);
    }
    return f;
  }

  Formula unary() {
    char c = peek();
    if (c == '!' || c == '?') {
      ++pos_;
      Sig e{ident()};
      Formula body = unary();
      return c == '!' ? Formula::bang(e, body) : Formula::quest(e, body);
    }
    return primary();
  }

  Formula primary() {
    char c = peek();
    switch (c) {
      case '1':
        ++pos_;
        return Formula::one();
      case '0':
        ++pos_;
        return Formula::zero();
      case '(': {
        ++pos_;
        Formula f = formula();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        return f;
      }
      default:
        break;
    }
    std::string name = ident();
    if (name == "T") return Formula::top();
    if (name == "F") return Formula::bot();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '^')
        fail("duality on compound formulas is computed, not written");
      return Formula::dual_atom(name);
    }
    return Formula::atom(name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text).parse_formula();
}

// Accepts an optional leading "|-" and a comma-separated formula list.
inline Sequent parse_sequent(std::string_view text) {
  return detail::FormulaParser(text).parse_sequent();
}

}  // namespace superll
