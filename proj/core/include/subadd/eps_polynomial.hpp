// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstddef>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

#include "subadd/rational.hpp"

namespace subadd {

/// Univariate polynomial in the degeneration parameter eps with rational
/// coefficients. Sparse: only nonzero coefficients are stored, so the zero
/// polynomial has an empty coefficient map.
///
/// Nothing is ever truncated implicitly. Callers that want a finite
/// expansion window slice it out with coefficient().
class EpsPolynomial {
 public:
  using Degree = std::size_t;
  static constexpr Degree kInfiniteValuation = std::numeric_limits<Degree>::max();

  EpsPolynomial() = default;
  EpsPolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  EpsPolynomial(I constant)  // NOLINT(google-explicit-constructor)
      : EpsPolynomial(Rational(constant)) {}
  explicit EpsPolynomial(std::map<Degree, Rational> coefficients);

  /// c * eps^degree
  static EpsPolynomial monomial(const Rational& c, Degree degree);
  /// eps^degree
  static EpsPolynomial eps(Degree degree = 1) { return monomial(Rational(1), degree); }

  [[nodiscard]] const std::map<Degree, Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_.begin()->first == 0); }
  [[nodiscard]] std::size_t term_count() const { return coeffs_.size(); }

  /// Order of vanishing at eps = 0; kInfiniteValuation for the zero polynomial.
  [[nodiscard]] Degree valuation() const;
  /// Highest degree with a nonzero coefficient; 0 for the zero polynomial.
  [[nodiscard]] Degree degree() const;
  [[nodiscard]] Rational coefficient(Degree d) const;
  [[nodiscard]] Rational at_zero() const { return coefficient(0); }
  [[nodiscard]] Rational evaluate(const Rational& at) const;

  /// p / eps^d. Throws std::domain_error when valuation(p) < d.
  [[nodiscard]] EpsPolynomial shift_down(Degree d) const;
  /// p * eps^d.
  [[nodiscard]] EpsPolynomial shift_up(Degree d) const;

  /// Exact quotient p / q; throws std::domain_error if q is zero or does not
  /// divide p.
  [[nodiscard]] EpsPolynomial divide_exact(const EpsPolynomial& q) const;

  EpsPolynomial& operator+=(const EpsPolynomial& rhs);
  EpsPolynomial& operator-=(const EpsPolynomial& rhs);
  EpsPolynomial& operator*=(const EpsPolynomial& rhs);
  EpsPolynomial& operator*=(const Rational& rhs);

  /// this += a * b, without materializing the product.
  void add_product(const EpsPolynomial& a, const EpsPolynomial& b);

  friend EpsPolynomial operator+(EpsPolynomial a, const EpsPolynomial& b) { return a += b; }
  friend EpsPolynomial operator-(EpsPolynomial a, const EpsPolynomial& b) { return a -= b; }
  friend EpsPolynomial operator*(const EpsPolynomial& a, const EpsPolynomial& b);
  friend EpsPolynomial operator*(EpsPolynomial a, const Rational& b) { return a *= b; }
  friend EpsPolynomial operator*(const Rational& b, EpsPolynomial a) { return a *= b; }
  template <std::integral I>
  friend EpsPolynomial operator*(EpsPolynomial a, I b) {
    return a *= Rational(b);
  }
  template <std::integral I>
  friend EpsPolynomial operator*(I b, EpsPolynomial a) {
    return a *= Rational(b);
  }
  EpsPolynomial operator-() const;

  friend bool operator==(const EpsPolynomial& a, const EpsPolynomial& b) = default;

  /// "c0 + c1*e + c2*e^2", zero terms omitted, "0" for the zero polynomial.
  [[nodiscard]] std::string str() const;
  /// Inverse of str(); throws std::invalid_argument on malformed text.
  static EpsPolynomial parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const EpsPolynomial& p) { return os << p.str(); }

 private:
  std::map<Degree, Rational> coeffs_;
};

enum class PolyOp { kAdd, kSub, kMul };

[[nodiscard]] EpsPolynomial poly_arith(const EpsPolynomial& a, const EpsPolynomial& b, PolyOp op);

}  // namespace subadd
