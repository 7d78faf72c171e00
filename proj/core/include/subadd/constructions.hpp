// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "subadd/eps_vector.hpp"
#include "subadd/independence.hpp"
#include "subadd/span_limit.hpp"
#include "subadd/tensor_families.hpp"

namespace subadd {

struct C1Spec {
  std::size_t n1 = 0, n2 = 0, n3 = 0;
};
struct C2Spec {
  std::size_t a = 0;
};
/// N = 0 stands for N = n^d.
struct C3Spec {
  std::size_t d = 0, n = 0, N = 0;
};
/// Without a system the sizes must be even and the half-cube system is used.
struct C4Spec {
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  std::optional<IndependenceSystem> system;
};

using ConstructionSpec = std::variant<C1Spec, C2Spec, C3Spec, C4Spec>;

/// Throws std::invalid_argument when the parameters violate the
/// construction's preconditions.
void validate_spec(const ConstructionSpec& spec);

/// "C1", "C2", "C3" or "C4".
[[nodiscard]] std::string construction_name(const ConstructionSpec& spec);
/// Parameter list as "name=value" pairs separated by commas, after
/// canonicalization.
[[nodiscard]] std::string construction_parameters(const ConstructionSpec& spec);

/// Moves the first odd size to the front, keeping the other two in order.
/// Throws std::invalid_argument when all sizes are even.
[[nodiscard]] C1Spec canonical_c1(const C1Spec& spec);

/// The two graph tensors of a construction.
struct Summands {
  Hypergraph g1;
  Hypergraph g2;
  RationalTensor t1;
  RationalTensor t2;

  [[nodiscard]] RationalTensor target() const { return direct_sum(t1, t2); }
  /// Sum of the weight products of both graphs.
  [[nodiscard]] std::size_t trivial_bound() const { return g1.weight_product() + g2.weight_product(); }
};

[[nodiscard]] Summands build_summands(const ConstructionSpec& spec);

/// Rank-one families in the order-3 space (V1+W1) x (V2+W2) x (V3+W3).
/// The first element is Z_{-1}; the rest follow their V-cells in
/// lexicographic order.
[[nodiscard]] std::vector<RankOneEpsTensor> build_c1_family(std::size_t n1, std::size_t n2, std::size_t n3);
[[nodiscard]] std::vector<RankOneEpsTensor> build_c2_family(std::size_t a);
[[nodiscard]] std::vector<RankOneEpsTensor> build_c4_family(const IndependenceSystem& sys);

/// Shape of the order-3 space carrying the family of a C1, C2 or C4 spec.
[[nodiscard]] Shape family_shape(const Summands& s);

/// sum(Z_i, i >= 1) - Z_{-1}, as an exact eps-tensor.
[[nodiscard]] EpsTensor family_defect(const std::vector<RankOneEpsTensor>& family, const Shape& shape);

/// eps^3 times the W-block of t2 (its last factor has dimension 1), in the
/// family space.
[[nodiscard]] EpsTensor expected_defect(const Summands& s);

struct VerificationReport {
  std::string construction;
  std::string parameters;
  std::size_t witness_size = 0;
  std::size_t lower_bound = 0;
  std::size_t trivial_additive_bound = 0;
  /// C1, C2, C4: sum(Z) - Z_{-1} = eps^3 u. C3: the expansion identity.
  bool identity_holds = false;
  bool border_rank_upper_confirmed = false;
  bool strict_subadditivity = false;
};

/// Fixed "key = value" block, one key per line.
void write_report(std::ostream& out, const VerificationReport& r);
[[nodiscard]] std::string report_text(const VerificationReport& r);

/// Expands the C3 decomposition for N = n^d and checks the identity; for
/// N < n^d also checks that T1 + T2(N) is the matching restriction. Throws
/// ConstructionError with the offending degree and multi-index when a
/// coefficient disagrees.
[[nodiscard]] VerificationReport verify_c3(std::size_t d, std::size_t n, std::size_t N = 0);

/// Builds and checks the construction. C1, C2, C4 go through the span limit
/// of their family; C3 through its exact decomposition.
[[nodiscard]] VerificationReport verify_construction(const ConstructionSpec& spec,
                                                     const GenericRankOptions& options = {});

/// Witness family of a C1, C2 or C4 spec in the witness file layout.
/// Throws std::invalid_argument for C3, whose certificate is not a span
/// family.
[[nodiscard]] std::vector<RankOneEpsTensor> build_family(const ConstructionSpec& spec);

}  // namespace subadd
