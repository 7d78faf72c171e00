// SPDX-License-Identifier: Apache-2.0
#include "subadd/exponent_grid.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace subadd {

namespace {

double parse_number(std::string_view text) {
  double v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw std::invalid_argument("range: bad number '" + std::string(text) + "'");
  }
  return v;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

BoundPoint evaluate(const GridSpec& spec, const std::vector<double>& x) {
  auto n = [&](std::size_t i) { return static_cast<std::size_t>(std::llround(x[i])); };
  switch (spec.family) {
    case GridFamily::kExtMamu:
      return ext_mamu_bounds(n(0), n(1));
    case GridFamily::kMultiEmamuFixedD:
      return multi_emamu_bounds(n(0), n(1), x[2], spec.count);
    case GridFamily::kMultiEmamuPOfD:
      return multi_emamu_p_of_d(n(1), n(0), spec.count);
    case GridFamily::kDome:
      return dome_bounds(n(0), x[1]);
  }
  throw std::logic_error("unknown grid family");
}

}  // namespace

std::string family_name(GridFamily f) {
  switch (f) {
    case GridFamily::kExtMamu: return "ext_mamu";
    case GridFamily::kMultiEmamuFixedD: return "multi_emamu_fixed_d";
    case GridFamily::kMultiEmamuPOfD: return "multi_emamu_p_of_d";
    case GridFamily::kDome: return "dome";
  }
  throw std::logic_error("unknown grid family");
}

GridFamily parse_family(std::string_view name) {
  for (auto f : {GridFamily::kExtMamu, GridFamily::kMultiEmamuFixedD, GridFamily::kMultiEmamuPOfD, GridFamily::kDome}) {
    if (family_name(f) == name) return f;
  }
  throw std::invalid_argument("unknown grid family '" + std::string(name) + "'");
}

std::vector<double> Range::values() const {
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  std::vector<double> out(count);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + static_cast<double>(k) * step;
  return out;
}

Range parse_range(std::string_view text, bool integral) {
  Range r;
  r.integral = integral;
  std::string_view bounds = text;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    r.step = parse_number(text.substr(colon + 1));
    bounds = text.substr(0, colon);
  }
  if (const auto dots = bounds.find(".."); dots != std::string_view::npos) {
    r.lo = parse_number(bounds.substr(0, dots));
    r.hi = parse_number(bounds.substr(dots + 2));
  } else {
    r.lo = r.hi = parse_number(bounds);
  }
  if (!(r.step > 0)) throw std::invalid_argument("range '" + std::string(text) + "': step must be positive");
  if (r.lo > r.hi) throw std::invalid_argument("range '" + std::string(text) + "': lo exceeds hi");
  if (integral) {
    for (double v : {r.lo, r.hi, r.step}) {
      if (v != std::floor(v)) throw std::invalid_argument("range '" + std::string(text) + "': integers required");
    }
  }
  return r;
}

std::vector<std::pair<std::string, bool>> grid_axes(GridFamily f) {
  switch (f) {
    case GridFamily::kExtMamu: return {{"n3", true}, {"n4", true}};
    case GridFamily::kMultiEmamuFixedD: return {{"d", true}, {"n", true}, {"p", false}};
    case GridFamily::kMultiEmamuPOfD: return {{"n", true}, {"d", true}};
    case GridFamily::kDome: return {{"n", true}, {"p", false}};
  }
  throw std::logic_error("unknown grid family");
}

GridSpec figure_defaults(GridFamily f) {
  GridSpec spec;
  spec.family = f;
  switch (f) {
    case GridFamily::kExtMamu:
      spec.axes = {{"n3", {2, 100, 1, true}}, {"n4", {4, 100, 1, true}}};
      break;
    case GridFamily::kMultiEmamuFixedD:
      spec.axes = {{"d", {4, 4, 1, true}}, {"n", {4, 100, 1, true}}, {"p", {0.505, 0.995, kFigurePStep, false}}};
      break;
    case GridFamily::kMultiEmamuPOfD:
      spec.axes = {{"n", {4, 100, 1, true}}, {"d", {3, 15, 1, true}}};
      break;
    case GridFamily::kDome:
      spec.axes = {{"n", {2, 50, 2, true}}, {"p", {kFigurePStep, 1 - kFigurePStep, kFigurePStep, false}}};
      break;
  }
  return spec;
}

std::vector<BoundPoint> generate_grid(const GridSpec& spec, unsigned jobs) {
  const auto names = grid_axes(spec.family);
  if (spec.axes.size() != names.size()) throw std::invalid_argument("grid: wrong number of axes for " + family_name(spec.family));
  std::vector<std::vector<double>> values;
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (spec.axes[i].name != names[i].first) throw std::invalid_argument("grid: expected axis " + names[i].first);
    values.push_back(spec.axes[i].range.values());
    dims.push_back(values.back().size());
  }
  std::size_t total = 1;
  for (auto d : dims) total *= d;

  std::vector<BoundPoint> out(total);
  std::vector<std::exception_ptr> errors(total);
  auto work = [&](std::size_t first, std::size_t stride) {
    std::vector<double> x(dims.size());
    for (std::size_t cell = first; cell < total; cell += stride) {
      std::size_t rest = cell;
      for (std::size_t j = dims.size(); j-- > 0;) {
        x[j] = values[j][rest % dims[j]];
        rest /= dims[j];
      }
      try {
        out[cell] = evaluate(spec, x);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(total, 1))));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void write_csv(std::ostream& out, const std::vector<BoundPoint>& points) {
  if (points.empty()) return;
  out << "family";
  for (const auto& p : points.front().params) out << ',' << p.name;
  out << ",omega_triv,omega_sch,delta\n";
  for (const auto& b : points) {
    out << b.family;
    for (const auto& p : b.params) {
      out << ',' << (p.integral ? std::to_string(std::llround(p.value)) : format_real(p.value));
    }
    out << ',' << format_real(b.omega_triv) << ',' << format_real(b.omega_sch) << ',' << format_real(b.delta) << '\n';
  }
}

void write_ppm(std::ostream& out, const GridSpec& spec, const std::vector<BoundPoint>& points) {
  if (spec.axes.empty()) throw std::invalid_argument("write_ppm: grid has no axes");
  const std::size_t width = spec.axes.back().range.values().size();
  if (width == 0 || points.size() % width != 0) throw std::invalid_argument("write_ppm: points do not fill the grid");
  const std::size_t height = points.size() / width;
  double max_pos = 0, max_neg = 0;
  for (const auto& b : points) {
    max_pos = std::max(max_pos, b.delta);
    max_neg = std::max(max_neg, -b.delta);
  }
  out << "P3\n" << width << ' ' << height << "\n255\n";
  for (std::size_t row = 0; row < height; ++row) {
    for (std::size_t col = 0; col < width; ++col) {
      const double d = points[row * width + col].delta;
      int r = 255, g = 255, b = 255;
      if (d < 0) {
        const double s = 0.25 + 0.75 * (-d / max_neg);
        r = 0;
        g = 0;
        b = static_cast<int>(std::lround(255 * s));
      } else if (d > 0) {
        const double s = 0.25 + 0.75 * (d / max_pos);
        r = static_cast<int>(std::lround(255 * s));
        g = static_cast<int>(std::lround(165 * s));
        b = 0;
      }
      out << r << ' ' << g << ' ' << b << (col + 1 == width ? '\n' : ' ');
    }
  }
}

}  // namespace subadd
