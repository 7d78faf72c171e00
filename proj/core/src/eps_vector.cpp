// SPDX-License-Identifier: Apache-2.0
#include "subadd/eps_vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace subadd {

EpsVector::EpsVector(std::size_t length, Entries entries) : length_(length), entries_(std::move(entries)) {
  std::erase_if(entries_, [](const auto& kv) { return kv.second.is_zero(); });
  if (!entries_.empty() && entries_.rbegin()->first >= length_) {
    throw std::invalid_argument("EpsVector: coordinate " + std::to_string(entries_.rbegin()->first) +
                                " outside length " + std::to_string(length_));
  }
}

EpsVector EpsVector::constant(const RationalVector& v) {
  Entries entries;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) entries.emplace(i, EpsPolynomial(v[i]));
  }
  return EpsVector(v.size(), std::move(entries));
}

EpsVector EpsVector::basis(std::size_t length, std::size_t coord, const EpsPolynomial& c) {
  return EpsVector(length, {{coord, c}});
}

EpsPolynomial EpsVector::at(std::size_t coord) const {
  const auto it = entries_.find(coord);
  return it == entries_.end() ? EpsPolynomial{} : it->second;
}

EpsPolynomial::Degree EpsVector::valuation() const {
  auto v = EpsPolynomial::kInfiniteValuation;
  for (const auto& [c, p] : entries_) v = std::min(v, p.valuation());
  return v;
}

EpsPolynomial::Degree EpsVector::degree() const {
  EpsPolynomial::Degree d = 0;
  for (const auto& [c, p] : entries_) d = std::max(d, p.degree());
  return d;
}

EpsVector EpsVector::shift_down(EpsPolynomial::Degree d) const {
  EpsVector out(length_);
  for (const auto& [c, p] : entries_) out.entries_.emplace(c, p.shift_down(d));
  return out;
}

EpsVector EpsVector::normalized() const {
  if (is_zero()) return *this;
  const auto v = valuation();
  return v == 0 ? *this : shift_down(v);
}

RationalVector EpsVector::at_zero() const {
  RationalVector out(length_);
  for (const auto& [c, p] : entries_) out[c] = p.at_zero();
  return out;
}

RationalVector EpsVector::evaluate(const Rational& eps) const {
  RationalVector out(length_);
  for (const auto& [c, p] : entries_) out[c] = p.evaluate(eps);
  return out;
}

void EpsVector::require_same_length(const EpsVector& rhs) const {
  if (length_ != rhs.length_) throw std::invalid_argument("EpsVector: length mismatch");
}

EpsVector& EpsVector::operator+=(const EpsVector& rhs) {
  require_same_length(rhs);
  for (const auto& [c, p] : rhs.entries_) {
    auto [it, inserted] = entries_.try_emplace(c, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
  return *this;
}

EpsVector& EpsVector::operator-=(const EpsVector& rhs) {
  add_scaled(Rational(-1), rhs);
  return *this;
}

EpsVector& EpsVector::operator*=(const EpsPolynomial& c) {
  if (c.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [coord, p] : entries_) p = p * c;
  return *this;
}

void EpsVector::add_scaled(const Rational& c, const EpsVector& v) {
  require_same_length(v);
  if (c.is_zero()) return;
  for (const auto& [coord, p] : v.entries_) {
    auto it = entries_.find(coord);
    if (it == entries_.end()) {
      entries_.emplace(coord, p * c);
    } else {
      it->second += p * c;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }
}

Shape RankOneEpsTensor::shape() const {
  std::vector<std::size_t> dims;
  for (const auto& f : factors) dims.push_back(f.length());
  return Shape(std::move(dims));
}

EpsVector expand_rank_one(const RankOneEpsTensor& z, const Shape& shape) {
  if (z.factors.size() != shape.order()) throw std::invalid_argument("expand_rank_one: factor count differs from shape");
  for (std::size_t j = 0; j < shape.order(); ++j) {
    if (z.factors[j].length() != shape[j]) {
      throw std::invalid_argument("expand_rank_one: factor " + std::to_string(j) + " has length " +
                                  std::to_string(z.factors[j].length()) + ", expected " + std::to_string(shape[j]));
    }
  }
  // Running outer product over the first j factors, keyed by row-major position.
  EpsVector::Entries acc{{0, EpsPolynomial(1)}};
  for (std::size_t j = 0; j < shape.order(); ++j) {
    EpsVector::Entries next;
    for (const auto& [pos, p] : acc) {
      for (const auto& [coord, q] : z.factors[j].entries()) next.emplace(pos * shape[j] + coord, p * q);
    }
    acc = std::move(next);
  }
  return EpsVector(shape.volume(), std::move(acc));
}

EpsTensor expand_to_tensor(const RankOneEpsTensor& z) {
  const Shape shape = z.shape();
  const EpsVector flat = expand_rank_one(z, shape);
  EpsTensor::Entries entries;
  for (const auto& [pos, p] : flat.entries()) entries.emplace(row_major_decode(pos, shape.dims()), p);
  return EpsTensor(shape, std::move(entries));
}

EpsTensor sum_of_rank_ones(const std::vector<RankOneEpsTensor>& family, const Shape& shape) {
  EpsVector total(shape.volume());
  for (const auto& z : family) total += expand_rank_one(z, shape);
  EpsTensor::Entries entries;
  for (const auto& [pos, p] : total.entries()) entries.emplace(row_major_decode(pos, shape.dims()), p);
  return EpsTensor(shape, std::move(entries));
}

}  // namespace subadd
