// SPDX-License-Identifier: Apache-2.0
#include "subadd/exponent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subadd {

namespace {

void require_open_unit(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error(std::string(who) + ": p must lie in (0,1)");
}

BoundPoint make_point(std::string family, std::vector<BoundParam> params, double triv, double sch) {
  return BoundPoint{std::move(family), std::move(params), triv, sch, triv - sch};
}

}  // namespace

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("binary_entropy: p must lie in [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double entropy_bound(double r, double p) {
  if (!(r >= 1.0)) throw std::domain_error("entropy_bound: r must be >= 1");
  return std::log2(r) - binary_entropy(p);
}

double schonhage_objective(std::size_t n1, std::size_t n2, double p) {
  const double big = static_cast<double>((n1 + 1) * (n2 + 1));
  const double r = big + 1.0;
  const double denom = p * std::log2(big) + (1.0 - p) * std::log2(static_cast<double>(n1 * n2));
  return 3.0 * entropy_bound(r, p) / denom;
}

SchonhageResult schonhage_omega(std::size_t n1, std::size_t n2) {
  if (n1 < 2 || n2 < 2) throw std::invalid_argument("schonhage_omega: n1 and n2 must be >= 2");
  constexpr int kSteps = 10000;
  constexpr double kStep = 1.0 / kSteps;
  int best = 1;
  double best_value = schonhage_objective(n1, n2, kStep);
  for (int k = 2; k < kSteps; ++k) {
    const double v = schonhage_objective(n1, n2, k * kStep);
    if (v < best_value) {
      best_value = v;
      best = k;
    }
  }
  double lo = std::max((best - 1) * kStep, kStep / 2), hi = std::min((best + 1) * kStep, 1.0 - kStep / 2);
  while (hi - lo > 1e-7) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (schonhage_objective(n1, n2, m1) < schonhage_objective(n1, n2, m2)) hi = m2;
    else lo = m1;
  }
  const double p = (lo + hi) / 2.0;
  const double v = schonhage_objective(n1, n2, p);
  if (v <= best_value) return {p, v};
  return {best * kStep, best_value};
}

BoundPoint ext_mamu_bounds(std::size_t n3, std::size_t n4) {
  if (n3 < 2) throw std::domain_error("ext_mamu_bounds: n3 must be >= 2");
  if (n4 < 4) throw std::domain_error("ext_mamu_bounds: n4 must be >= 4");
  const double a = static_cast<double>(n4 - 2);
  const double p = std::log2(a) / (std::log2(static_cast<double>(n3)) + std::log2(a));
  const double sch = entropy_bound(4.0 * (a + 2.0) + 1.0, p) / p;
  const double triv = 2.0 + std::log2(static_cast<double>(n3)) + std::log2(static_cast<double>(n4));
  return make_point("ext_mamu",
                    {{"n3", double(n3), true}, {"n4", double(n4), true}, {"a", a, true}, {"p", p, false}}, triv, sch);
}

double c3_border_rank(std::size_t d, std::size_t n, C3Count count) {
  const double nd = static_cast<double>(n);
  const double base = std::pow(nd, double(d)) + 2.0 * std::pow(nd, double(d - 1)) + 1.0;
  if (count == C3Count::kPublished) return base + nd * nd * std::pow(nd + 1.0, double(d) - 3.0);
  return base + double(d - 2) * std::pow(nd, double(d - 1));
}

BoundPoint multi_emamu_bounds(std::size_t d, std::size_t n, double p, C3Count count) {
  if (d < 3) throw std::domain_error("multi_emamu_bounds: d must be >= 3");
  if (n < 2) throw std::domain_error("multi_emamu_bounds: n must be >= 2");
  require_open_unit(p, "multi_emamu_bounds");
  const double sch = entropy_bound(c3_border_rank(d, n, count), p) / p;
  const double triv = double(d) * std::log2(double(n)) * (1.0 + (1.0 - p) / p);
  return make_point("multi_emamu", {{"d", double(d), true}, {"n", double(n), true}, {"p", p, false}}, triv, sch);
}

BoundPoint multi_emamu_p_of_d(std::size_t d, std::size_t n, C3Count count) {
  if (d < 3) throw std::domain_error("multi_emamu_p_of_d: d must be >= 3");
  BoundPoint b = multi_emamu_bounds(d, n, double(d) / double(d + 1), count);
  b.family = "multi_emamu_p_of_d";
  return b;
}

BoundPoint dome_bounds(std::size_t n, double p) {
  if (n < 2 || n % 2 != 0) throw std::domain_error("dome_bounds: n must be even and >= 2");
  require_open_unit(p, "dome_bounds");
  const double nd = static_cast<double>(n);
  const double sch = entropy_bound(std::pow(nd + 1.0, 3.0) + 1.0, p);
  const double triv = 3.0 * p * std::log2(nd + 1.0) + 3.0 * (1.0 - p) * std::log2(nd) - 2.0 * (1.0 - p);
  return make_point("dome", {{"n", nd, true}, {"p", p, false}}, triv, sch);
}

}  // namespace subadd
