// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace subadd {

/// 1-based grid cell (j1, j2, j3).
using Triple = std::array<std::size_t, 3>;

/// Disjoint J, K1, K2, K3 in [1,n1] x [1,n2] x [1,n3] with bijections
/// s_i : J -> K_i that keep coordinate i.
struct IndependenceSystem {
  Triple grid{};
  std::vector<Triple> J;               // sorted
  std::array<std::map<Triple, Triple>, 3> s;  // s[i] : J -> K_{i+1}

  [[nodiscard]] std::size_t size() const { return J.size(); }
  /// K_{i+1} as a sorted list.
  [[nodiscard]] std::vector<Triple> K(std::size_t i) const;
  /// Empty string when every invariant holds, otherwise the first violation.
  [[nodiscard]] std::string violation() const;
  [[nodiscard]] bool valid() const { return violation().empty(); }
};

/// The explicit half-cube system for even n1, n2, n3, of size n1 n2 n3 / 4.
/// Throws std::invalid_argument unless all sizes are even and positive.
[[nodiscard]] IndependenceSystem independence_system_even(std::size_t n1, std::size_t n2, std::size_t n3);

/// Largest grid volume brute_force_M accepts.
inline constexpr std::size_t kBruteForceCellLimit = 16;

/// Backtracking search for a system of exactly `size` stars. Throws
/// SearchGuardError when n1 n2 n3 > kBruteForceCellLimit.
[[nodiscard]] std::optional<IndependenceSystem> find_independence_system(std::size_t n1, std::size_t n2,
                                                                         std::size_t n3, std::size_t size);

[[nodiscard]] bool brute_force_M(std::size_t n1, std::size_t n2, std::size_t n3, std::size_t size);

// Text format:
//   grid n1 n2 n3
//   size M
//   j1 j2 j3 | a1 a2 a3 | b1 b2 b3 | c1 c2 c3     (j, s1(j), s2(j), s3(j))
void write_system(std::ostream& out, const IndependenceSystem& sys);
/// Throws std::invalid_argument on malformed text; does not validate.
[[nodiscard]] IndependenceSystem read_system(std::istream& in);

}  // namespace subadd
