// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "subadd/eps_vector.hpp"

namespace subadd {

/// A span-limit witness: rank-one elements living in the target shape with
/// factor `mode` removed.
struct SpanWitness {
  Shape ambient;
  std::size_t mode = 0;
  std::vector<RankOneEpsTensor> family;

  friend bool operator==(const SpanWitness&, const SpanWitness&) = default;
};

// Witness format:
//   ambient-shape d1 ... d(k-1)
//   mode m
//   size r
//   coord:poly,coord:poly;coord:poly;...   (one element per line, ';' between factors)

void write_witness(std::ostream& out, const SpanWitness& w);
[[nodiscard]] std::string witness_text(const SpanWitness& w);
/// Throws std::invalid_argument on malformed input.
[[nodiscard]] SpanWitness read_witness(std::istream& in);

}  // namespace subadd
