// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subadd/eps_vector.hpp"
#include "subadd/sparse_tensor.hpp"

namespace subadd {

/// Terms of the order-(d+1) identity
///   sum(q) - P - sum(P') - sum(P'') = eps^(2d-2) (T1 + T2) + O(eps^(2d-1)).
struct C3Decomposition {
  std::size_t d = 0;
  std::size_t n = 0;
  Shape shape;
  std::vector<RankOneEpsTensor> q;
  std::vector<RankOneEpsTensor> p;  // one term
  std::vector<RankOneEpsTensor> p_prime;
  std::vector<RankOneEpsTensor> p_dprime;

  /// n^d + 1 + |P'| + |P''|
  [[nodiscard]] std::size_t witness_size() const { return q.size() + p.size() + p_prime.size() + p_dprime.size(); }
};

/// Requires d >= 3 and n >= 1 (std::invalid_argument otherwise). P'' is
/// grouped by the first factor among 3..d that carries w, giving
/// (d-2) n^(d-1) terms.
[[nodiscard]] C3Decomposition build_c3_decomposition(std::size_t d, std::size_t n);

/// sum(q) - P - sum(P') - sum(P'').
[[nodiscard]] EpsTensor c3_remainder(const C3Decomposition& dec);

/// T1 + T2 of the construction with N = n^d, in the decomposition's shape.
[[nodiscard]] RationalTensor c3_target(std::size_t d, std::size_t n);

struct C3Failure {
  std::size_t degree = 0;
  MultiIndex index;
  std::string message;
};

/// First violation of the identity, or nullopt when it holds: every
/// coefficient of degree < 2d-2 vanishes and degree 2d-2 equals T1 + T2.
[[nodiscard]] std::optional<C3Failure> check_c3_expansion(const C3Decomposition& dec);

}  // namespace subadd
