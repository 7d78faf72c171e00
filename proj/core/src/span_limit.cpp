// SPDX-License-Identifier: Apache-2.0
#include "subadd/span_limit.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "subadd/errors.hpp"
#include "subadd/matrix.hpp"

namespace subadd {

namespace {

Matrix matrix_of(const std::vector<RationalVector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("vector length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

// Rows r_k = sum_j comb_k[j] * input_j in row-echelon form. Each row is zero
// at the pivot columns of the rows before it.
class TrackedEchelon {
 public:
  explicit TrackedEchelon(std::size_t inputs) : inputs_(inputs) {}

  // Reduces `v` (input number `owner`). Returns the combination c with
  // sum_j c[j] * input_j = 0 and c[owner] = 1 when v depends on the rows so
  // far; otherwise stores v as a new row and returns an empty vector.
  RationalVector insert(RationalVector v, std::size_t owner) {
    RationalVector comb(inputs_);
    comb[owner] = Rational(1);
    for (const auto& row : rows_) {
      const Rational& x = v[row.pivot];
      if (x.is_zero()) continue;
      const Rational f = x / row.vec[row.pivot];
      for (std::size_t j = row.pivot; j < v.size(); ++j) {
        if (!row.vec[j].is_zero()) v[j] -= f * row.vec[j];
      }
      for (std::size_t j = 0; j < owner; ++j) {
        if (!row.comb[j].is_zero()) comb[j] -= f * row.comb[j];
      }
    }
    const auto nz = std::find_if(v.begin(), v.end(), [](const Rational& x) { return !x.is_zero(); });
    if (nz == v.end()) return comb;
    rows_.push_back({static_cast<std::size_t>(nz - v.begin()), std::move(v), std::move(comb)});
    return {};
  }

 private:
  struct Row {
    std::size_t pivot;
    RationalVector vec;
    RationalVector comb;
  };
  std::size_t inputs_;
  std::vector<Row> rows_;
};

using PolyMatrix = std::vector<std::vector<EpsPolynomial>>;

// Fraction-free Bareiss elimination with full pivoting; every division by
// the previous pivot is exact.
std::size_t bareiss_rank(PolyMatrix m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  EpsPolynomial prev(1);
  std::size_t k = 0;
  for (; k < std::min(rows, cols); ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (!m[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    if (pc != k) {
      for (auto& row : m) std::swap(row[k], row[pc]);
    }
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        EpsPolynomial num = m[k][k] * m[i][j];
        num -= m[i][k] * m[k][j];
        m[i][j] = num.divide_exact(prev);
      }
      m[i][k] = EpsPolynomial{};
    }
    prev = m[k][k];
  }
  return k;
}

}  // namespace

void SpanFamily::validate() const {
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].length() != ambient_dim) {
      throw std::invalid_argument("SpanFamily: vector " + std::to_string(i) + " has length " +
                                  std::to_string(vectors[i].length()) + ", ambient dimension is " +
                                  std::to_string(ambient_dim));
    }
  }
}

std::size_t generic_rank(const SpanFamily& f, const GenericRankOptions& options) {
  f.validate();
  const std::size_t full = std::min(f.vectors.size(), f.ambient_dim);
  if (full == 0) return 0;
  if (options.fast_precheck) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<long> num(1, 1L << 30);
    const Rational at(num(rng), num(rng));
    std::vector<RationalVector> rows;
    for (const auto& v : f.vectors) rows.push_back(v.evaluate(at));
    if (matrix_rank(matrix_of(rows, f.ambient_dim)) == full) return full;
  }
  // Restrict to the columns some vector touches; the rest are zero.
  std::vector<std::size_t> cols;
  for (const auto& v : f.vectors) {
    for (const auto& [c, p] : v.entries()) cols.push_back(c);
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  PolyMatrix m(f.vectors.size(), std::vector<EpsPolynomial>(cols.size()));
  for (std::size_t i = 0; i < f.vectors.size(); ++i) {
    for (const auto& [c, p] : f.vectors[i].entries()) {
      m[i][static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin())] = p;
    }
  }
  return bareiss_rank(std::move(m));
}

std::vector<RationalVector> limit_span(const SpanFamily& f) {
  f.validate();
  const std::size_t r = f.vectors.size();
  std::vector<EpsVector> v;
  v.reserve(r);
  EpsPolynomial::Degree max_deg = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (f.vectors[i].is_zero()) throw DependentFamilyError("limit_span: vector " + std::to_string(i) + " is zero");
    max_deg = std::max(max_deg, f.vectors[i].degree());
    v.push_back(f.vectors[i].normalized());
  }
  const std::size_t guard = r * (1 + max_deg);
  std::size_t replacements = 0;
  TrackedEchelon echelon(r);
  std::size_t i = 0;
  while (i < r) {
    RationalVector comb = echelon.insert(v[i].at_zero(), i);
    if (comb.empty()) {
      ++i;
      continue;
    }
    if (++replacements > guard) {
      throw IterationGuardError("limit_span: more than " + std::to_string(guard) + " replacements");
    }
    // The leading vectors combine to zero, so this combination has
    // valuation >= 1. Vectors before i keep their echelon rows.
    EpsVector replaced(f.ambient_dim);
    for (std::size_t j = 0; j <= i; ++j) replaced.add_scaled(comb[j], v[j]);
    if (replaced.is_zero()) {
      throw DependentFamilyError("limit_span: family is dependent over Q(eps) (vector " + std::to_string(i) + ")");
    }
    v[i] = replaced.normalized();
  }
  std::vector<RationalVector> out;
  out.reserve(r);
  for (const auto& x : v) out.push_back(x.at_zero());
  return out;
}

bool membership(const RationalVector& v, const std::vector<RationalVector>& basis) {
  return all_members({v}, basis);
}

bool all_members(const std::vector<RationalVector>& vs, const std::vector<RationalVector>& basis) {
  if (vs.empty()) return true;
  const std::size_t dim = vs.front().size();
  const std::size_t base_rank = basis.empty() ? 0 : matrix_rank(matrix_of(basis, dim));
  std::vector<RationalVector> all = basis;
  all.insert(all.end(), vs.begin(), vs.end());
  return matrix_rank(matrix_of(all, dim)) == base_rank;
}

SpanLimitReport verify_span_limit_witness(const RationalTensor& target, const std::vector<RankOneEpsTensor>& family,
                                          std::size_t mode, const GenericRankOptions& options) {
  if (mode >= target.order() || target.order() < 2) throw std::invalid_argument("verify_span_limit_witness: bad mode");
  const Shape ambient = target.shape().without(mode);
  SpanFamily f{ambient.volume(), {}};
  for (const auto& z : family) f.vectors.push_back(expand_rank_one(z, ambient));

  SpanLimitReport report;
  report.family_size = family.size();
  report.implied_border_rank_upper = family.size();
  const Matrix flat = flattening(target, mode);
  std::vector<RationalVector> image;
  for (std::size_t i = 0; i < flat.rows(); ++i) image.push_back(flat.dense_row(i));
  report.target_image_dim = matrix_rank(flat);

  report.generic_rank_ok = generic_rank(f, options) == family.size();
  if (!report.generic_rank_ok) return report;
  report.contained = all_members(image, limit_span(f));
  return report;
}

}  // namespace subadd
