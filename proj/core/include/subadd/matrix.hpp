// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "subadd/rational.hpp"
#include "subadd/sparse_tensor.hpp"

namespace subadd {

/// Rational matrix with sparse rows.
class Matrix {
 public:
  using Row = std::map<std::size_t, Rational>;

  Matrix(std::size_t rows, std::size_t cols);
  [[nodiscard]] static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] const Row& row(std::size_t i) const { return rows_.at(i); }
  [[nodiscard]] Rational at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  /// Row i as a dense vector.
  [[nodiscard]] std::vector<Rational> dense_row(std::size_t i) const;

 private:
  std::size_t cols_;
  std::vector<Row> rows_;
};

/// Rows indexed by the coordinate of `mode`, columns by the row-major
/// combination of the remaining coordinates.
[[nodiscard]] Matrix flattening(const RationalTensor& t, std::size_t mode);
/// Rejects tensors with eps-dependent entries (std::invalid_argument).
[[nodiscard]] Matrix flattening(const EpsTensor& t, std::size_t mode);

/// Rank over Q by fraction-free elimination on integer-scaled rows.
[[nodiscard]] std::size_t matrix_rank(const Matrix& m);

[[nodiscard]] bool is_concise(const RationalTensor& t);

/// Largest flattening rank over all modes.
[[nodiscard]] std::size_t border_rank_lower_bound(const RationalTensor& t);

}  // namespace subadd
