// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "subadd/eps_polynomial.hpp"
#include "subadd/sparse_tensor.hpp"

namespace subadd {

using RationalVector = std::vector<Rational>;

/// Sparse vector of eps-polynomials in a space of fixed length.
class EpsVector {
 public:
  using Entries = std::map<std::size_t, EpsPolynomial>;

  EpsVector() = default;
  explicit EpsVector(std::size_t length) : length_(length) {}
  EpsVector(std::size_t length, Entries entries);
  /// Embeds a rational vector as constants.
  [[nodiscard]] static EpsVector constant(const RationalVector& v);
  /// c * eps^degree at one coordinate.
  [[nodiscard]] static EpsVector basis(std::size_t length, std::size_t coord, const EpsPolynomial& c = 1);

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] const Entries& entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] EpsPolynomial at(std::size_t coord) const;

  /// Smallest entry valuation; kInfiniteValuation for the zero vector.
  [[nodiscard]] EpsPolynomial::Degree valuation() const;
  /// Largest entry degree; 0 for the zero vector.
  [[nodiscard]] EpsPolynomial::Degree degree() const;
  [[nodiscard]] EpsVector shift_down(EpsPolynomial::Degree d) const;
  /// Divides out eps^valuation; the zero vector is returned unchanged.
  [[nodiscard]] EpsVector normalized() const;
  [[nodiscard]] RationalVector at_zero() const;
  [[nodiscard]] RationalVector evaluate(const Rational& eps) const;

  EpsVector& operator+=(const EpsVector& rhs);
  EpsVector& operator-=(const EpsVector& rhs);
  EpsVector& operator*=(const EpsPolynomial& c);
  /// this += c * v
  void add_scaled(const Rational& c, const EpsVector& v);

  friend EpsVector operator+(EpsVector a, const EpsVector& b) { return a += b; }
  friend EpsVector operator-(EpsVector a, const EpsVector& b) { return a -= b; }
  friend EpsVector operator*(EpsVector a, const EpsPolynomial& c) { return a *= c; }
  friend EpsVector operator*(const EpsPolynomial& c, EpsVector a) { return a *= c; }

  friend bool operator==(const EpsVector&, const EpsVector&) = default;

 private:
  void require_same_length(const EpsVector& rhs) const;

  std::size_t length_ = 0;
  Entries entries_;
};

/// Outer product of k factor vectors, one per tensor factor.
struct RankOneEpsTensor {
  std::vector<EpsVector> factors;

  [[nodiscard]] Shape shape() const;
  friend bool operator==(const RankOneEpsTensor&, const RankOneEpsTensor&) = default;
};

/// Row-major flattened outer product in the space of `shape`; throws
/// std::invalid_argument when the factor lengths differ from shape.
[[nodiscard]] EpsVector expand_rank_one(const RankOneEpsTensor& z, const Shape& shape);

/// The outer product as an eps-tensor of order z.factors.size().
[[nodiscard]] EpsTensor expand_to_tensor(const RankOneEpsTensor& z);

/// Sum of the outer products of a family sharing one shape.
[[nodiscard]] EpsTensor sum_of_rank_ones(const std::vector<RankOneEpsTensor>& family, const Shape& shape);

}  // namespace subadd
