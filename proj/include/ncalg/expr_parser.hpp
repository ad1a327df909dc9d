#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "ncalg/errors.hpp"
#include "ncalg/param_poly.hpp"

namespace ncalg {

/// Recursive-descent parser for the coefficient expression grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := ('+' | '-') unary | power
///   power  := atom ('^' ['-'] integer)?
///   atom   := integer | identifier | '(' expr ')'
///
/// Whitespace is ignored. `Ops` supplies the value type:
///   T from_integer(const Rational&)
///   T from_symbol(std::string_view name, std::size_t pos)   // may throw
///   T div(const T&, const T&, std::size_t pos)
///   T pow(const T&, long exponent, std::size_t pos)
/// and T must provide + - * and unary -.
template <class T, class Ops>
class ExprParser {
 public:
  ExprParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  T parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty expression");
    T v = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected character '") + text_[pos_] + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  T expr() {
    T v = term();
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v - term();
      else return v;
    }
  }

  T term() {
    T v = unary();
    for (;;) {
      skip_ws();
      std::size_t at = pos_;
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        T d = unary();
        v = ops_.div(v, d, at);
      } else {
        return v;
      }
    }
  }

  T unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  T power() {
    T base = atom();
    skip_ws();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected integer exponent");
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 6) fail("exponent too large");
    long e = std::stol(digits);
    return ops_.pow(base, neg ? -e : e, at);
  }

  T atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      T v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational r(std::string(text_.substr(start, pos_ - start)), 10);
      return ops_.from_integer(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ops_.from_symbol(text_.substr(start, pos_ - start), start);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace ncalg
