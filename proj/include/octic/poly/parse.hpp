#ifndef OCTIC_POLY_PARSE_HPP
#define OCTIC_POLY_PARSE_HPP

// Reader for the plain-text polynomial syntax written by Poly::str():
//   2269*z1 - 378*z2 + 3/4*z3^2*z4 - (z1 + z2)^2
// Coefficients may be integers or p/q rationals; '/' is accepted only in
// front of an integer literal.

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

#include "octic/poly/polynomial.hpp"

namespace octic {

class PolyParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <class Field>
class PolyParser {
 public:
  PolyParser(RingPtr<Field> ring, std::string_view src) : ring_(std::move(ring)), s_(src) {}

  Poly<Field> run() {
    auto p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError("poly parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::string integer_literal() {
    skip_ws();
    std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected integer");
    return std::string(s_.substr(b, pos_ - b));
  }

  Poly<Field> expr() {
    Poly<Field> acc(ring_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (eat('+')) {
      } else if (eat('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      auto t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Poly<Field> term() {
    auto acc = power();
    while (true) {
      if (eat('*')) {
        acc = acc * power();
      } else if (eat('/')) {
        auto d = ring_->field.parse(integer_literal());
        if (d.is_zero()) fail("division by zero");
        acc = d.inverse() * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly<Field> power() {
    auto base = primary();
    if (eat('^')) {
      auto e = std::stoul(integer_literal());
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Poly<Field> primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      auto p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto v = ring_->field.parse(integer_literal());
      return Poly<Field>(ring_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(b, pos_ - b));
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (ring_->vars[i] == name) return Poly<Field>::var(ring_, i);
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  RingPtr<Field> ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class Field>
Poly<Field> parse_poly(const RingPtr<Field>& ring, std::string_view text) {
  return detail::PolyParser<Field>(ring, text).run();
}

}  // namespace octic

#endif  // OCTIC_POLY_PARSE_HPP
