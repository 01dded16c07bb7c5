#pragma once

// Recursive-descent parser for polynomial expressions:
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := primary ("^" uint)*
//   primary:= scalar | varname | "(" expr ")"
//   scalar := int ["/" int]
//
// Whitespace is insignificant. A leading "-" on an expression is accepted so
// that printed polynomials parse back unchanged.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "splitci/error.hpp"
#include "splitci/polyring.hpp"
#include "splitci/scalar.hpp"

namespace splitci {

namespace detail {

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  Polynomial expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (accept('^')) {
      skip_ws();
      const auto digits = take_while([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
      if (digits.empty()) fail("expected exponent after '^'");
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) return Polynomial::constant(ring_, scalar());
    if (std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
      const auto name = take_while([](char ch) { return std::isalnum(static_cast<unsigned char>(ch)) != 0 || ch == '_'; });
      const std::string n(name);
      if (!ring_->vars().contains(n)) fail("unknown variable '" + n + "'");
      return Polynomial::variable(ring_, ring_->vars().index_of(n));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Scalar scalar() {
    const std::size_t start = pos_;
    take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
    std::size_t save = pos_;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      skip_ws();
      std::string literal(text_.substr(start, save - start));
      literal += '/';
      if (pos_ < text_.size() && text_[pos_] == '-') {
        literal += '-';
        ++pos_;
      }
      const auto den = take_while([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; });
      if (den.empty()) fail("expected denominator");
      literal += den;
      return parse_scalar(literal, ring_->field);
    }
    pos_ = save;
    return parse_scalar(text_.substr(start, save - start), ring_->field);
  }

  template <class Pred>
  std::string_view take_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::ExpressionParser(text, ring).parse();
}

/// Parses and requires a nonzero homogeneous form of degree 1.
inline LinearForm parse_linear_form(std::string_view text, const RingPtr& ring) {
  const Polynomial p = parse_polynomial(text, ring);
  if (p.is_zero()) throw Error(ErrorKind::Parse, "zero linear factor '" + std::string(text) + "'");
  return LinearForm::from_polynomial(p);
}

}  // namespace splitci
