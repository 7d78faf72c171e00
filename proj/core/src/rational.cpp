// SPDX-License-Identifier: Apache-2.0
#include "subadd/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace subadd {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (sgn(value_.get_den()) == 0) throw std::domain_error("Rational: zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw std::invalid_argument("Rational: malformed literal '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (sgn(d) == 0) throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

}  // namespace subadd
