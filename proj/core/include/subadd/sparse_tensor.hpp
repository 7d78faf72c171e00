// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "subadd/eps_polynomial.hpp"
#include "subadd/rational.hpp"

namespace subadd {

using MultiIndex = std::vector<std::size_t>;

/// Dimensions of the tensor factors V_1 x ... x V_k; every dimension >= 1.
class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) { validate(); }
  Shape(std::initializer_list<std::size_t> dims) : dims_(dims) { validate(); }

  [[nodiscard]] std::size_t order() const { return dims_.size(); }
  [[nodiscard]] std::size_t operator[](std::size_t j) const { return dims_.at(j); }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] bool contains(const MultiIndex& idx) const {
    if (idx.size() != dims_.size()) return false;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      if (idx[j] >= dims_[j]) return false;
    }
    return true;
  }
  /// Shape with factor `mode` removed; requires order >= 2.
  [[nodiscard]] Shape without(std::size_t mode) const {
    if (order() < 2 || mode >= order()) throw std::invalid_argument("Shape::without: bad mode");
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < dims_.size(); ++j) {
      if (j != mode) rest.push_back(dims_[j]);
    }
    return Shape(std::move(rest));
  }
  /// Product of all dimensions.
  [[nodiscard]] std::size_t volume() const {
    std::size_t v = 1;
    for (auto d : dims_) v *= d;
    return v;
  }

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  void validate() const {
    if (dims_.empty()) throw std::invalid_argument("Shape: order must be >= 1");
    for (auto d : dims_) {
      if (d == 0) throw std::invalid_argument("Shape: zero-dimensional factor");
    }
  }
  std::vector<std::size_t> dims_;
};

/// Row-major position of `idx` in `shape` (last coordinate fastest).
[[nodiscard]] inline std::size_t row_major(const MultiIndex& idx, const std::vector<std::size_t>& dims) {
  std::size_t pos = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) pos = pos * dims[j] + idx[j];
  return pos;
}

[[nodiscard]] inline MultiIndex row_major_decode(std::size_t pos, const std::vector<std::size_t>& dims) {
  MultiIndex idx(dims.size());
  for (std::size_t j = dims.size(); j-- > 0;) {
    idx[j] = pos % dims[j];
    pos /= dims[j];
  }
  return idx;
}

/// Order-k tensor stored as a sorted map from multi-index to nonzero scalar.
/// Scalar is Rational or EpsPolynomial. Values are immutable once built;
/// construct through the entry-map constructor or an EntryAccumulator.
template <class Scalar>
class SparseTensor {
 public:
  using Entries = std::map<MultiIndex, Scalar>;

  SparseTensor() = default;
  explicit SparseTensor(Shape shape) : shape_(std::move(shape)) {}
  SparseTensor(Shape shape, Entries entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
    std::erase_if(entries_, [](const auto& kv) { return kv.second.is_zero(); });
    for (const auto& [idx, value] : entries_) {
      if (!shape_.contains(idx)) throw std::invalid_argument("SparseTensor: multi-index outside shape");
    }
  }

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] std::size_t order() const { return shape_.order(); }
  [[nodiscard]] const Entries& entries() const { return entries_; }
  [[nodiscard]] std::size_t nnz() const { return entries_.size(); }
  [[nodiscard]] Scalar at(const MultiIndex& idx) const {
    const auto it = entries_.find(idx);
    return it == entries_.end() ? Scalar{} : it->second;
  }

  friend bool operator==(const SparseTensor&, const SparseTensor&) = default;

 private:
  Shape shape_;
  Entries entries_;
};

using RationalTensor = SparseTensor<Rational>;
using EpsTensor = SparseTensor<EpsPolynomial>;

/// Mutable staging area for building a tensor entry by entry; cancelling
/// contributions are pruned on the way.
template <class Scalar>
class EntryAccumulator {
 public:
  explicit EntryAccumulator(Shape shape) : shape_(std::move(shape)) {}

  void add(const MultiIndex& idx, const Scalar& value) {
    if (value.is_zero()) return;
    if (!shape_.contains(idx)) throw std::invalid_argument("EntryAccumulator: multi-index outside shape");
    auto [it, inserted] = entries_.try_emplace(idx, value);
    if (!inserted) {
      it->second += value;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  void subtract(const MultiIndex& idx, const Scalar& value) { add(idx, -value); }

  [[nodiscard]] const Shape& shape() const { return shape_; }
  [[nodiscard]] SparseTensor<Scalar> build() && { return SparseTensor<Scalar>(std::move(shape_), std::move(entries_)); }
  [[nodiscard]] SparseTensor<Scalar> build() const& { return SparseTensor<Scalar>(shape_, entries_); }

 private:
  Shape shape_;
  typename SparseTensor<Scalar>::Entries entries_;
};

/// Embeds a rational tensor into Q[eps] as constants.
[[nodiscard]] EpsTensor to_eps(const RationalTensor& t);

/// Coefficient of eps^d of every entry.
[[nodiscard]] RationalTensor coefficient_tensor(const EpsTensor& t, EpsPolynomial::Degree d);

/// Converts an eps-tensor whose entries are all constants; throws
/// std::invalid_argument if any entry depends on eps.
[[nodiscard]] RationalTensor require_constant(const EpsTensor& t);

/// Largest entry degree of an eps-tensor (0 for the zero tensor).
[[nodiscard]] EpsPolynomial::Degree max_degree(const EpsTensor& t);

}  // namespace subadd
