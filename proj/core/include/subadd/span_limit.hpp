// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "subadd/eps_vector.hpp"
#include "subadd/sparse_tensor.hpp"

namespace subadd {

/// Vectors spanning a subspace of Q(eps)^ambient_dim.
struct SpanFamily {
  std::size_t ambient_dim = 0;
  std::vector<EpsVector> vectors;

  /// Throws std::invalid_argument if a vector has the wrong length.
  void validate() const;
};

struct GenericRankOptions {
  /// Try a seeded random rational specialization of eps first. A
  /// specialization can only prove full rank; anything less falls through
  /// to the exact elimination.
  bool fast_precheck = true;
  std::uint64_t seed = 0;
};

/// Rank over Q(eps), by fraction-free elimination over Q[eps].
[[nodiscard]] std::size_t generic_rank(const SpanFamily& f, const GenericRankOptions& options = {});

/// Q-basis of lim_{eps->0} span(f). Requires f to be independent over Q(eps);
/// throws DependentFamilyError otherwise and IterationGuardError if the
/// replacement loop overruns its bound.
[[nodiscard]] std::vector<RationalVector> limit_span(const SpanFamily& f);

/// True iff v lies in the Q-span of basis.
[[nodiscard]] bool membership(const RationalVector& v, const std::vector<RationalVector>& basis);

/// True iff every vector of `vs` lies in the Q-span of basis.
[[nodiscard]] bool all_members(const std::vector<RationalVector>& vs, const std::vector<RationalVector>& basis);

struct SpanLimitReport {
  std::size_t family_size = 0;
  bool generic_rank_ok = false;
  bool contained = false;
  std::size_t implied_border_rank_upper = 0;
  /// Dimension of the flattening image that had to be contained.
  std::size_t target_image_dim = 0;
};

/// Checks that the image of the flattening of `target` at `mode` lies in the
/// limit span of the flattened family. Family factors must match the target
/// shape with `mode` removed.
[[nodiscard]] SpanLimitReport verify_span_limit_witness(const RationalTensor& target,
                                                        const std::vector<RankOneEpsTensor>& family, std::size_t mode,
                                                        const GenericRankOptions& options = {});

}  // namespace subadd
