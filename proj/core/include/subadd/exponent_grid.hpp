// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "subadd/exponent.hpp"

namespace subadd {

enum class GridFamily { kExtMamu, kMultiEmamuFixedD, kMultiEmamuPOfD, kDome };

[[nodiscard]] std::string family_name(GridFamily f);
/// Accepts the names produced by family_name; throws std::invalid_argument.
[[nodiscard]] GridFamily parse_family(std::string_view name);

/// Inclusive range lo, lo+step, ... <= hi.
struct Range {
  double lo = 0;
  double hi = 0;
  double step = 1;
  bool integral = true;

  [[nodiscard]] std::vector<double> values() const;
};

/// "lo..hi[:step]" or a single value. Throws std::invalid_argument on
/// malformed text, lo > hi, step <= 0, or non-integers for an integral range.
[[nodiscard]] Range parse_range(std::string_view text, bool integral);

struct GridAxis {
  std::string name;
  Range range;
};

/// Axes in row-major order (last axis fastest).
struct GridSpec {
  GridFamily family = GridFamily::kExtMamu;
  std::vector<GridAxis> axes;
  C3Count count = C3Count::kPublished;
};

/// Axis names of a family in row-major order, and whether each is integral.
[[nodiscard]] std::vector<std::pair<std::string, bool>> grid_axes(GridFamily f);

/// Ranges of the published figures; p-steps are 0.005.
[[nodiscard]] GridSpec figure_defaults(GridFamily f);

/// Default p step for figure grids.
inline constexpr double kFigurePStep = 0.005;

/// One point per cell in row-major order. Cells are independent; `jobs`
/// worker threads share them and the output order does not depend on jobs.
/// Parameter domain errors propagate as std::domain_error.
[[nodiscard]] std::vector<BoundPoint> generate_grid(const GridSpec& spec, unsigned jobs = 1);

/// Header "family,<params>,omega_triv,omega_sch,delta"; reals with 12
/// significant digits.
void write_csv(std::ostream& out, const std::vector<BoundPoint>& points);

/// Plain PPM heatmap: one pixel per cell, rows by the leading axes, columns
/// by the last axis. Blue for delta < 0, orange for delta > 0, white for 0.
void write_ppm(std::ostream& out, const GridSpec& spec, const std::vector<BoundPoint>& points);

}  // namespace subadd
