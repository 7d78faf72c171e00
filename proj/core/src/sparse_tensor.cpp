// SPDX-License-Identifier: Apache-2.0
#include "subadd/sparse_tensor.hpp"

#include <algorithm>

namespace subadd {

EpsTensor to_eps(const RationalTensor& t) {
  EpsTensor::Entries entries;
  for (const auto& [idx, value] : t.entries()) entries.emplace(idx, EpsPolynomial(value));
  return EpsTensor(t.shape(), std::move(entries));
}

RationalTensor coefficient_tensor(const EpsTensor& t, EpsPolynomial::Degree d) {
  RationalTensor::Entries entries;
  for (const auto& [idx, value] : t.entries()) {
    Rational c = value.coefficient(d);
    if (!c.is_zero()) entries.emplace(idx, std::move(c));
  }
  return RationalTensor(t.shape(), std::move(entries));
}

RationalTensor require_constant(const EpsTensor& t) {
  for (const auto& [idx, value] : t.entries()) {
    if (!value.is_constant()) throw std::invalid_argument("expected an eps-free tensor");
  }
  return coefficient_tensor(t, 0);
}

EpsPolynomial::Degree max_degree(const EpsTensor& t) {
  EpsPolynomial::Degree d = 0;
  for (const auto& [idx, value] : t.entries()) d = std::max(d, value.degree());
  return d;
}

}  // namespace subadd
