// SPDX-License-Identifier: Apache-2.0
#include "subadd/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace subadd {

namespace {

using IntRow = std::map<std::size_t, mpz_class>;

IntRow integer_row(const Matrix::Row& row) {
  mpz_class lcm = 1;
  for (const auto& [col, value] : row) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.denominator().get_mpz_t());
  IntRow out;
  for (const auto& [col, value] : row) out.emplace(col, value.numerator() * (lcm / value.denominator()));
  return out;
}

void remove_content(IntRow& row) {
  mpz_class g = 0;
  for (const auto& [col, value] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (auto& [col, value] : row) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), g.get_mpz_t());
  }
}

// row <- p_lead * row - row_lead * pivot, which clears the leading column.
void eliminate(IntRow& row, const IntRow& pivot) {
  const mpz_class p = pivot.begin()->second;
  const mpz_class q = row.begin()->second;
  for (auto& [col, value] : row) value *= p;
  for (const auto& [col, value] : pivot) {
    auto it = row.find(col);
    if (it == row.end()) {
      row.emplace(col, -q * value);
    } else {
      it->second -= q * value;
      if (it->second == 0) row.erase(it);
    }
  }
  remove_content(row);
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Rational Matrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  const auto it = r.find(j);
  return it == r.end() ? Rational(0) : it->second;
}

void Matrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= rows_.size() || j >= cols_) throw std::out_of_range("Matrix::set: index out of range");
  if (value.is_zero()) {
    rows_[i].erase(j);
  } else {
    rows_[i][j] = value;
  }
}

std::vector<Rational> Matrix::dense_row(std::size_t i) const {
  std::vector<Rational> out(cols_);
  for (const auto& [j, value] : rows_.at(i)) out[j] = value;
  return out;
}

Matrix flattening(const RationalTensor& t, std::size_t mode) {
  if (mode >= t.order()) throw std::invalid_argument("flattening: mode out of range");
  const std::size_t cols = t.order() == 1 ? 1 : t.shape().without(mode).volume();
  std::vector<std::size_t> rest_dims;
  for (std::size_t j = 0; j < t.order(); ++j) {
    if (j != mode) rest_dims.push_back(t.shape()[j]);
  }
  Matrix m(t.shape()[mode], cols);
  MultiIndex rest(rest_dims.size());
  for (const auto& [idx, value] : t.entries()) {
    for (std::size_t j = 0, q = 0; j < t.order(); ++j) {
      if (j != mode) rest[q++] = idx[j];
    }
    m.set(idx[mode], row_major(rest, rest_dims), value);
  }
  return m;
}

Matrix flattening(const EpsTensor& t, std::size_t mode) { return flattening(require_constant(t), mode); }

std::size_t matrix_rank(const Matrix& m) {
  // Pivot rows keyed by leading column; each row is reduced until its
  // leading column is new or it vanishes.
  std::map<std::size_t, IntRow> pivots;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    IntRow row = integer_row(m.row(i));
    remove_content(row);
    while (!row.empty()) {
      const auto it = pivots.find(row.begin()->first);
      if (it == pivots.end()) {
        const std::size_t lead = row.begin()->first;
        pivots.emplace(lead, std::move(row));
        break;
      }
      eliminate(row, it->second);
    }
    if (pivots.size() == std::min(m.rows(), m.cols())) break;
  }
  return pivots.size();
}

bool is_concise(const RationalTensor& t) {
  for (std::size_t j = 0; j < t.order(); ++j) {
    if (matrix_rank(flattening(t, j)) != t.shape()[j]) return false;
  }
  return true;
}

std::size_t border_rank_lower_bound(const RationalTensor& t) {
  std::size_t best = 0;
  for (std::size_t j = 0; j < t.order(); ++j) best = std::max(best, matrix_rank(flattening(t, j)));
  return best;
}

}  // namespace subadd
