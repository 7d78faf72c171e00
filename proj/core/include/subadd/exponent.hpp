// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace subadd {

// All logarithms are base 2.

/// -p log p - (1-p) log(1-p), with h(0) = h(1) = 0. Throws std::domain_error
/// outside [0, 1].
[[nodiscard]] double binary_entropy(double p);

/// log r - h(p): the exponent bound for a direct sum of border rank r.
/// Throws std::domain_error for r < 1 or p outside [0, 1].
[[nodiscard]] double entropy_bound(double r, double p);

/// 3 (log r - h(p)) / (p log((n1+1)(n2+1)) + (1-p) log(n1 n2)) with
/// r = (n1+1)(n2+1)+1.
[[nodiscard]] double schonhage_objective(std::size_t n1, std::size_t n2, double p);

struct SchonhageResult {
  double p_star = 0;
  double omega_star = 0;
};

/// Minimizes schonhage_objective over p in (0,1): grid of step 1e-4, then
/// ternary refinement to 1e-7. Throws std::invalid_argument unless n1, n2 >= 2.
[[nodiscard]] SchonhageResult schonhage_omega(std::size_t n1, std::size_t n2);

struct BoundParam {
  std::string name;
  double value = 0;
  bool integral = true;
};

struct BoundPoint {
  std::string family;
  std::vector<BoundParam> params;
  double omega_triv = 0;
  double omega_sch = 0;
  double delta = 0;  // omega_triv - omega_sch
};

/// Requires n3 >= 2, n4 >= 4; a = n4 - 2 and p = log a / (log n3 + log a).
[[nodiscard]] BoundPoint ext_mamu_bounds(std::size_t n3, std::size_t n4);

/// Which border-rank count enters the multiEMaMu bound.
enum class C3Count {
  /// n^d + 2n^(d-1) + n^2 (n+1)^(d-3) + 1, the published count.
  kPublished,
  /// n^d + 2n^(d-1) + (d-2) n^(d-1) + 1, the size of the verified witness.
  kVerified,
};

/// Border-rank upper bound of T1 + T2 entering the multiEMaMu bound.
[[nodiscard]] double c3_border_rank(std::size_t d, std::size_t n, C3Count count);

/// Requires d >= 3, n >= 2, p in (0,1).
[[nodiscard]] BoundPoint multi_emamu_bounds(std::size_t d, std::size_t n, double p,
                                            C3Count count = C3Count::kPublished);
/// multi_emamu_bounds at p = d / (d+1).
[[nodiscard]] BoundPoint multi_emamu_p_of_d(std::size_t d, std::size_t n, C3Count count = C3Count::kPublished);

/// Requires n >= 2 even, p in (0,1).
[[nodiscard]] BoundPoint dome_bounds(std::size_t n, double p);

}  // namespace subadd
