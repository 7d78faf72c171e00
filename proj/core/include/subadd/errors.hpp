// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace subadd {

// Precondition violations use std::invalid_argument (shapes, parameters) or
// std::domain_error (math domain). The types below mark failures that are
// not caller mistakes.

/// A claimed construction identity does not hold.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A span family is linearly dependent over Q(eps).
class DependentFamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The span-limit loop exceeded its provable iteration bound.
class IterationGuardError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force search was asked for a size beyond its guard.
class SearchGuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace subadd
