// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "subadd/sparse_tensor.hpp"

namespace subadd {

// Dump format:
//   order k
//   dims d1 ... dk
//   scalar-ring Q        (or Q[e])
//   i1 ... ik : scalar   (one line per entry, multi-indices ascending)

void write_tensor(std::ostream& out, const RationalTensor& t);
void write_tensor(std::ostream& out, const EpsTensor& t);
[[nodiscard]] std::string dump_tensor(const RationalTensor& t);
[[nodiscard]] std::string dump_tensor(const EpsTensor& t);

using AnyTensor = std::variant<RationalTensor, EpsTensor>;

/// Parses the dump format; throws std::invalid_argument on malformed input.
[[nodiscard]] AnyTensor read_tensor(std::istream& in);

}  // namespace subadd
