// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "subadd/sparse_tensor.hpp"

namespace subadd {

namespace detail {

inline void require_same_order(const Shape& a, const Shape& b, const char* what) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(what) + ": order mismatch (" + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()) + ")");
  }
}

}  // namespace detail

/// Block-diagonal direct sum: entries of s are offset by t's dimension in
/// every factor.
template <class Scalar>
[[nodiscard]] SparseTensor<Scalar> direct_sum(const SparseTensor<Scalar>& t, const SparseTensor<Scalar>& s) {
  detail::require_same_order(t.shape(), s.shape(), "direct_sum");
  const std::size_t k = t.order();
  std::vector<std::size_t> dims(k);
  for (std::size_t j = 0; j < k; ++j) dims[j] = t.shape()[j] + s.shape()[j];
  typename SparseTensor<Scalar>::Entries entries = t.entries();
  for (const auto& [idx, value] : s.entries()) {
    MultiIndex shifted(k);
    for (std::size_t j = 0; j < k; ++j) shifted[j] = idx[j] + t.shape()[j];
    entries.emplace(std::move(shifted), value);
  }
  return SparseTensor<Scalar>(Shape(std::move(dims)), std::move(entries));
}

/// Kronecker product: factor j of the result pairs coordinates row-major,
/// (i_j, i'_j) -> i_j * dim(s_j) + i'_j.
template <class Scalar>
[[nodiscard]] SparseTensor<Scalar> kronecker(const SparseTensor<Scalar>& t, const SparseTensor<Scalar>& s) {
  detail::require_same_order(t.shape(), s.shape(), "kronecker");
  const std::size_t k = t.order();
  std::vector<std::size_t> dims(k);
  for (std::size_t j = 0; j < k; ++j) dims[j] = t.shape()[j] * s.shape()[j];
  typename SparseTensor<Scalar>::Entries entries;
  for (const auto& [ti, tv] : t.entries()) {
    for (const auto& [si, sv] : s.entries()) {
      MultiIndex idx(k);
      for (std::size_t j = 0; j < k; ++j) idx[j] = ti[j] * s.shape()[j] + si[j];
      entries.emplace(std::move(idx), tv * sv);
    }
  }
  return SparseTensor<Scalar>(Shape(std::move(dims)), std::move(entries));
}

/// Restricts every factor to the listed coordinates (renumbered in order).
template <class Scalar>
[[nodiscard]] SparseTensor<Scalar> restrict_tensor(const SparseTensor<Scalar>& t,
                                                   const std::vector<std::vector<std::size_t>>& keep) {
  if (keep.size() != t.order()) throw std::invalid_argument("restrict_tensor: need one coordinate list per factor");
  std::vector<std::vector<std::ptrdiff_t>> renumber(t.order());
  std::vector<std::size_t> dims(t.order());
  for (std::size_t j = 0; j < t.order(); ++j) {
    renumber[j].assign(t.shape()[j], -1);
    for (std::size_t pos = 0; pos < keep[j].size(); ++pos) {
      if (keep[j][pos] >= t.shape()[j]) throw std::invalid_argument("restrict_tensor: coordinate out of range");
      renumber[j][keep[j][pos]] = static_cast<std::ptrdiff_t>(pos);
    }
    dims[j] = keep[j].size();
  }
  typename SparseTensor<Scalar>::Entries entries;
  for (const auto& [idx, value] : t.entries()) {
    MultiIndex out(t.order());
    bool inside = true;
    for (std::size_t j = 0; j < t.order() && inside; ++j) {
      inside = renumber[j][idx[j]] >= 0;
      if (inside) out[j] = static_cast<std::size_t>(renumber[j][idx[j]]);
    }
    if (inside) entries.emplace(std::move(out), value);
  }
  return SparseTensor<Scalar>(Shape(std::move(dims)), std::move(entries));
}

/// Permutation relabeling of a tensor: factor j is sent to factor
/// factor_targets[j] and its coordinates through index_maps[j]. An empty
/// factor_targets means the identity factor order.
struct Relabeling {
  std::vector<std::size_t> factor_targets;
  std::vector<std::vector<std::size_t>> index_maps;

  [[nodiscard]] static Relabeling identity(const Shape& shape) {
    Relabeling r;
    for (auto d : shape.dims()) {
      std::vector<std::size_t> m(d);
      std::iota(m.begin(), m.end(), std::size_t{0});
      r.index_maps.push_back(std::move(m));
    }
    return r;
  }
};

/// Shape of the relabeled tensor; throws std::invalid_argument unless the
/// relabeling consists of genuine bijections matching `shape`.
[[nodiscard]] Shape relabeled_shape(const Shape& shape, const Relabeling& r);

template <class Scalar>
[[nodiscard]] SparseTensor<Scalar> relabel(const SparseTensor<Scalar>& t, const Relabeling& r) {
  const Shape target = relabeled_shape(t.shape(), r);
  const std::size_t k = t.order();
  typename SparseTensor<Scalar>::Entries entries;
  for (const auto& [idx, value] : t.entries()) {
    MultiIndex out(k);
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t dest = r.factor_targets.empty() ? j : r.factor_targets[j];
      out[dest] = r.index_maps[j][idx[j]];
    }
    entries.emplace(std::move(out), value);
  }
  return SparseTensor<Scalar>(target, std::move(entries));
}

/// True iff relabeling t by r gives exactly s. Throws std::invalid_argument
/// when the relabeled shape differs from s's shape.
template <class Scalar>
[[nodiscard]] bool equal_up_to_bijection(const SparseTensor<Scalar>& t, const SparseTensor<Scalar>& s,
                                         const Relabeling& r) {
  if (relabeled_shape(t.shape(), r) != s.shape()) {
    throw std::invalid_argument("equal_up_to_bijection: shapes differ under the relabeling");
  }
  if (t.nnz() != s.nnz()) return false;
  return relabel(t, r) == s;
}

/// Bijection realizing (t1 + t2)^{x2} ~ t1^{x2} + t1 x t2 + t2 x t1 + t2^{x2}
/// factor by factor, for summand dimensions a_j = dim t1_j, b_j = dim t2_j.
[[nodiscard]] Relabeling binomial_square_relabeling(const Shape& t1, const Shape& t2);

/// Checks the N-th binomial expansion identity of (t1 + t2)^{xN}. Only N = 2
/// is supported (throws std::invalid_argument otherwise).
[[nodiscard]] bool binomial_expand_check(const RationalTensor& t1, const RationalTensor& t2, int n = 2);

}  // namespace subadd
