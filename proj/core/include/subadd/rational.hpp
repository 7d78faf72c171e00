// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace subadd {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Backed by GMP, so numerators never overflow.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "num" or "num/den" (optional leading '-'); throws
  /// std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& value() const { return value_; }
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  /// "num/den", with "/den" omitted when the denominator is 1.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace subadd
