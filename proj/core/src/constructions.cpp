// SPDX-License-Identifier: Apache-2.0
#include "subadd/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "subadd/construction_c3.hpp"
#include "subadd/errors.hpp"
#include "subadd/matrix.hpp"

namespace subadd {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Each order-3 factor is V_p (coordinates 0..vdim-1) followed by W_p.
struct Layout {
  std::array<std::size_t, 3> vdim{};
  std::array<std::size_t, 3> wdim{};

  [[nodiscard]] Shape shape() const {
    return Shape{vdim[0] + wdim[0], vdim[1] + wdim[1], vdim[2] + wdim[2]};
  }
  [[nodiscard]] std::size_t length(std::size_t p) const { return vdim[p] + wdim[p]; }
  [[nodiscard]] EpsVector v(std::size_t p, std::size_t x) const { return EpsVector::basis(length(p), x); }
  [[nodiscard]] EpsVector w(std::size_t p, std::size_t l, const EpsPolynomial& c) const {
    return EpsVector::basis(length(p), vdim[p] + l, c);
  }
  [[nodiscard]] EpsVector v_sum(std::size_t p) const {
    EpsVector::Entries e;
    for (std::size_t x = 0; x < vdim[p]; ++x) e.emplace(x, EpsPolynomial(1));
    return EpsVector(length(p), std::move(e));
  }
};

using Cell = std::array<std::size_t, 3>;
using CellMap = std::map<Cell, RankOneEpsTensor>;

// Single basis coordinate and coefficient of a constant vector with one entry.
std::pair<std::size_t, Rational> single_entry(const EpsVector& a) {
  if (a.entries().size() != 1) throw ConstructionError("seed factor at eps = 0 is not a single basis vector");
  const auto& [coord, c] = *a.entries().begin();
  return {coord, c.at_zero()};
}

// Adds the omega corrections cancelling the degree-1 part of the seeds, the
// v x v x v fill-ins, and Z_{-1} in front.
std::vector<RankOneEpsTensor> assemble(const Layout& L, CellMap cells) {
  std::array<std::map<std::pair<std::size_t, std::size_t>, EpsVector>, 3> omega;
  for (const auto& [cell, z] : cells) {
    std::array<EpsVector, 3> a, b;
    for (std::size_t p = 0; p < 3; ++p) {
      const auto& f = z.factors[p];
      if (f.degree() > 1) throw ConstructionError("seed factor has eps-degree above 1");
      EpsVector::Entries lo, hi;
      for (const auto& [coord, poly] : f.entries()) {
        if (!poly.coefficient(0).is_zero()) lo.emplace(coord, EpsPolynomial(poly.coefficient(0)));
        if (!poly.coefficient(1).is_zero()) hi.emplace(coord, EpsPolynomial(poly.coefficient(1)));
      }
      a[p] = EpsVector(f.length(), std::move(lo));
      b[p] = EpsVector(f.length(), std::move(hi));
    }
    for (std::size_t p = 0; p < 3; ++p) {
      if (b[p].is_zero()) continue;
      const std::size_t q = (p + 1) % 3 < (p + 2) % 3 ? (p + 1) % 3 : (p + 2) % 3;
      const std::size_t r = 3 - p - q;
      const auto [xq, cq] = single_entry(a[q]);
      const auto [xr, cr] = single_entry(a[r]);
      auto [it, fresh] = omega[p].try_emplace({xq, xr}, EpsVector(L.length(p)));
      it->second.add_scaled(cq * cr, b[p]);
    }
  }
  for (std::size_t p = 0; p < 3; ++p) {
    const std::size_t q = p == 0 ? 1 : 0;
    const std::size_t r = p == 2 ? 1 : 2;
    for (const auto& [key, om] : omega[p]) {
      if (om.is_zero()) continue;
      Cell cell{};
      cell[q] = key.first;
      cell[r] = key.second;
      bool placed = false;
      for (std::size_t x = 0; x < L.vdim[p] && !placed; ++x) {
        cell[p] = x;
        if (cells.contains(cell)) continue;
        RankOneEpsTensor z;
        z.factors.resize(3);
        z.factors[p] = L.v(p, x) - om * EpsPolynomial::eps();
        z.factors[q] = L.v(q, key.first);
        z.factors[r] = L.v(r, key.second);
        cells.emplace(cell, std::move(z));
        placed = true;
      }
      if (!placed) throw ConstructionError("no free cell for an omega correction along axis " + std::to_string(p + 1));
    }
  }
  for (std::size_t x = 0; x < L.vdim[0]; ++x)
    for (std::size_t y = 0; y < L.vdim[1]; ++y)
      for (std::size_t z = 0; z < L.vdim[2]; ++z)
        cells.try_emplace(Cell{x, y, z}, RankOneEpsTensor{{L.v(0, x), L.v(1, y), L.v(2, z)}});
  std::vector<RankOneEpsTensor> family;
  family.reserve(cells.size() + 1);
  family.push_back(RankOneEpsTensor{{L.v_sum(0), L.v_sum(1), L.v_sum(2)}});
  for (auto& [cell, z] : cells) family.push_back(std::move(z));
  return family;
}

RankOneEpsTensor rank_one(EpsVector a, EpsVector b, EpsVector c) {
  return RankOneEpsTensor{{std::move(a), std::move(b), std::move(c)}};
}

const EpsPolynomial kEps = EpsPolynomial::eps();

std::size_t c1_matrix_size(const C1Spec& s) { return (s.n1 - 1) / 2 * (s.n2 - 1) * (s.n3 - 1); }

IndependenceSystem c4_system(const C4Spec& s) {
  if (s.system) return *s.system;
  return independence_system_even(s.n1, s.n2, s.n3);
}

}  // namespace

C1Spec canonical_c1(const C1Spec& spec) {
  if (spec.n1 % 2 == 1) return spec;
  if (spec.n2 % 2 == 1) return {spec.n2, spec.n1, spec.n3};
  if (spec.n3 % 2 == 1) return {spec.n3, spec.n1, spec.n2};
  throw std::invalid_argument("C1: one of n1, n2, n3 must be odd");
}

void validate_spec(const ConstructionSpec& spec) {
  std::visit(Overloaded{
                 [](const C1Spec& s) {
                   if (s.n1 < 2 || s.n2 < 2 || s.n3 < 2) throw std::invalid_argument("C1: n1, n2, n3 must be >= 2");
                   (void)canonical_c1(s);
                 },
                 [](const C2Spec& s) {
                   if (s.a < 2) throw std::invalid_argument("C2: a must be >= 2");
                 },
                 [](const C3Spec& s) {
                   if (s.d < 3) throw std::invalid_argument("C3: d must be >= 3");
                   if (s.n < 1) throw std::invalid_argument("C3: n must be >= 1");
                   if (s.N > ipow(s.n, s.d)) throw std::invalid_argument("C3: N must be <= n^d");
                 },
                 [](const C4Spec& s) {
                   if (s.n1 < 1 || s.n2 < 1 || s.n3 < 1) throw std::invalid_argument("C4: sizes must be >= 1");
                   if (s.system) {
                     if (s.system->grid != Triple{s.n1, s.n2, s.n3}) {
                       throw std::invalid_argument("C4: system grid differs from n1, n2, n3");
                     }
                     if (const auto why = s.system->violation(); !why.empty()) {
                       throw std::invalid_argument("C4: invalid independence system: " + why);
                     }
                     if (s.system->size() == 0) throw std::invalid_argument("C4: independence system is empty");
                   } else if (s.n1 % 2 || s.n2 % 2 || s.n3 % 2) {
                     throw std::invalid_argument("C4: odd sizes need a user-supplied independence system");
                   }
                 },
             },
             spec);
}

std::string construction_name(const ConstructionSpec& spec) {
  return std::visit(Overloaded{
                        [](const C1Spec&) { return std::string("C1"); },
                        [](const C2Spec&) { return std::string("C2"); },
                        [](const C3Spec&) { return std::string("C3"); },
                        [](const C4Spec&) { return std::string("C4"); },
                    },
                    spec);
}

std::string construction_parameters(const ConstructionSpec& spec) {
  return std::visit(Overloaded{
                        [](const C1Spec& s) {
                          const C1Spec c = canonical_c1(s);
                          return "n1=" + std::to_string(c.n1) + ",n2=" + std::to_string(c.n2) +
                                 ",n3=" + std::to_string(c.n3) + ",N=" + std::to_string(c1_matrix_size(c));
                        },
                        [](const C2Spec& s) { return "a=" + std::to_string(s.a); },
                        [](const C3Spec& s) {
                          const std::size_t N = s.N == 0 ? ipow(s.n, s.d) : s.N;
                          return "d=" + std::to_string(s.d) + ",n=" + std::to_string(s.n) + ",N=" + std::to_string(N);
                        },
                        [](const C4Spec& s) {
                          return "n1=" + std::to_string(s.n1) + ",n2=" + std::to_string(s.n2) +
                                 ",n3=" + std::to_string(s.n3) + ",M=" + std::to_string(c4_system(s).size());
                        },
                    },
                    spec);
}

Summands build_summands(const ConstructionSpec& spec) {
  validate_spec(spec);
  auto make = [](Hypergraph g1, Hypergraph g2) {
    RationalTensor t1 = graph_tensor(g1);
    RationalTensor t2 = graph_tensor(g2);
    return Summands{std::move(g1), std::move(g2), std::move(t1), std::move(t2)};
  };
  return std::visit(Overloaded{
                        [&](const C1Spec& s) {
                          const C1Spec c = canonical_c1(s);
                          return make(spider_graph({c.n1 + 1, c.n2 + 1, c.n3 + 1}),
                                      Hypergraph(4, {{{1, 2}, c1_matrix_size(c)}}));
                        },
                        [&](const C2Spec& s) {
                          return make(spider_graph({2, 2, s.a + 2}), Hypergraph(4, {{{1, 2}, s.a}}));
                        },
                        [&](const C3Spec& s) {
                          const std::size_t N = s.N == 0 ? ipow(s.n, s.d) : s.N;
                          return make(spider_graph(std::vector<std::size_t>(s.d, s.n)),
                                      Hypergraph(s.d + 1, {{{1, 2}, N}}));
                        },
                        [&](const C4Spec& s) {
                          return make(spider_graph({s.n1 + 1, s.n2 + 1, s.n3 + 1}),
                                      Hypergraph(4, {{{1, 2, 3}, c4_system(s).size()}}));
                        },
                    },
                    spec);
}

std::vector<RankOneEpsTensor> build_c1_family(std::size_t n1, std::size_t n2, std::size_t n3) {
  if (n1 < 2 || n2 < 2 || n3 < 2 || n1 % 2 == 0) {
    throw std::invalid_argument("build_c1_family: needs n1 odd and n1, n2, n3 >= 2");
  }
  const std::size_t m1 = (n1 - 1) / 2, m2 = n2 - 1, m3 = n3 - 1;
  const std::size_t N = m1 * m2 * m3;
  const Layout L{{n1 + 1, n2 + 1, n3 + 1}, {N, N, 1}};
  auto ell = [&](std::size_t j1, std::size_t j2, std::size_t j3) { return ((j1 - 1) * m2 + (j2 - 1)) * m3 + (j3 - 1); };

  CellMap seeds;
  for (std::size_t j1 = 1; j1 <= m1; ++j1) {
    for (std::size_t j2 = 1; j2 <= m2; ++j2) {
      for (std::size_t j3 = 1; j3 <= m3; ++j3) {
        const std::size_t l = ell(j1, j2, j3);
        seeds.emplace(Cell{j1, j2, j3}, rank_one(L.v(0, j1) + L.w(0, l, kEps), L.v(1, j2) + L.w(1, l, kEps),
                                                 L.v(2, j3) + L.w(2, 0, kEps)));
        seeds.emplace(Cell{m1 + j1, j2, j3},
                      rank_one(L.v(0, m1 + j1) + L.w(0, l, kEps), L.v(1, j2) - L.w(1, l, kEps), L.v(2, j3)));
      }
    }
  }
  // Pair the leftover first- and second-axis w-columns with v3_0.
  for (std::size_t k2 = 1; k2 <= m2; ++k2) {
    EpsVector f = L.v(0, n1);
    for (std::size_t j1 = 1; j1 <= m1; ++j1)
      for (std::size_t j3 = 1; j3 <= m3; ++j3) f += L.w(0, ell(j1, k2, j3), kEps);
    seeds.emplace(Cell{n1, k2, 0}, rank_one(std::move(f), L.v(1, k2), L.v(2, 0) - L.w(2, 0, kEps)));
  }
  for (std::size_t k1 = 1; k1 <= m1; ++k1) {
    EpsVector f = L.v(1, n2);
    for (std::size_t j2 = 1; j2 <= m2; ++j2)
      for (std::size_t j3 = 1; j3 <= m3; ++j3) f += L.w(1, ell(k1, j2, j3), kEps);
    seeds.emplace(Cell{k1, n2, 0}, rank_one(L.v(0, k1), std::move(f), L.v(2, 0) - L.w(2, 0, kEps)));
  }
  return assemble(L, std::move(seeds));
}

std::vector<RankOneEpsTensor> build_c2_family(std::size_t a) {
  if (a < 2) throw std::invalid_argument("build_c2_family: a must be >= 2");
  // V3 coordinate of the basis vector with label i in -1..a is i + 1.
  const Layout L{{2, 2, a + 2}, {a, a, 1}};
  const EpsPolynomial two_over_a = EpsPolynomial::monomial(Rational(2, static_cast<long>(a)), 1);
  const EpsPolynomial a_over_two = EpsPolynomial::monomial(Rational(static_cast<long>(a), 2), 1);
  auto w_sum = [&](std::size_t p, const EpsPolynomial& c) {
    EpsVector s(L.length(p));
    for (std::size_t l = 0; l < a; ++l) s += L.w(p, l, c);
    return s;
  };

  std::vector<RankOneEpsTensor> family;
  family.push_back(rank_one(L.v_sum(0), L.v_sum(1), L.v_sum(2)));
  CellMap cells;
  for (std::size_t i = 1; i <= a; ++i) {
    const std::size_t l = i - 1, x3 = i + 1;
    cells.emplace(Cell{0, 0, x3}, rank_one(L.v(0, 0) + L.w(0, l, kEps), L.v(1, 0) + L.w(1, l, kEps),
                                           L.v(2, x3) + L.w(2, 0, kEps)));
    cells.emplace(Cell{0, 1, x3}, rank_one(L.v(0, 0) + L.w(0, l, kEps), L.v(1, 1) - L.w(1, l, kEps), L.v(2, x3)));
    cells.emplace(Cell{1, 0, x3}, rank_one(L.v(0, 1) - L.w(0, l, kEps), L.v(1, 0), L.v(2, x3)));
    cells.emplace(Cell{1, 1, x3}, rank_one(L.v(0, 1) - L.w(0, l, kEps), L.v(1, 1), L.v(2, x3)));
  }
  cells.emplace(Cell{0, 0, 0}, rank_one(L.v(0, 0), L.v(1, 0) + w_sum(1, two_over_a), L.v(2, 0) - L.w(2, 0, a_over_two)));
  cells.emplace(Cell{0, 0, 1}, rank_one(L.v(0, 0) + w_sum(0, two_over_a), L.v(1, 0), L.v(2, 1) - L.w(2, 0, a_over_two)));
  cells.emplace(Cell{0, 1, 0}, rank_one(L.v(0, 0), L.v(1, 1) - w_sum(1, two_over_a), L.v(2, 0)));
  cells.emplace(Cell{1, 0, 1}, rank_one(L.v(0, 1) - w_sum(0, two_over_a), L.v(1, 0), L.v(2, 1)));
  for (const Cell c : {Cell{1, 0, 0}, Cell{0, 1, 1}, Cell{1, 1, 0}, Cell{1, 1, 1}}) {
    cells.emplace(c, rank_one(L.v(0, c[0]), L.v(1, c[1]), L.v(2, c[2])));
  }
  for (auto& [cell, z] : cells) family.push_back(std::move(z));
  return family;
}

std::vector<RankOneEpsTensor> build_c4_family(const IndependenceSystem& sys) {
  if (const auto why = sys.violation(); !why.empty()) throw std::invalid_argument("build_c4_family: " + why);
  if (sys.size() == 0) throw std::invalid_argument("build_c4_family: empty independence system");
  const std::size_t M = sys.size();
  const Layout L{{sys.grid[0] + 1, sys.grid[1] + 1, sys.grid[2] + 1}, {M, M, M}};
  std::map<Triple, std::size_t> label;
  for (std::size_t l = 0; l < M; ++l) label.emplace(sys.J[l], l);

  // Sign of the eps w-term in each factor, per group (0 means plain v).
  constexpr int kSigns[3][3] = {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}};
  auto factor = [&](std::size_t p, std::size_t x, std::size_t l, int sign) {
    EpsVector f = L.v(p, x);
    if (sign > 0) f += L.w(p, l, kEps);
    if (sign < 0) f -= L.w(p, l, kEps);
    return f;
  };
  CellMap seeds;
  for (const auto& j : sys.J) {
    const std::size_t l = label.at(j);
    seeds.emplace(j, rank_one(factor(0, j[0], l, 1), factor(1, j[1], l, 1), factor(2, j[2], l, 1)));
    for (std::size_t i = 0; i < 3; ++i) {
      const Triple& k = sys.s[i].at(j);
      seeds.emplace(k, rank_one(factor(0, k[0], l, kSigns[i][0]), factor(1, k[1], l, kSigns[i][1]),
                                factor(2, k[2], l, kSigns[i][2])));
    }
  }
  return assemble(L, std::move(seeds));
}

Shape family_shape(const Summands& s) { return s.target().shape().without(3); }

EpsTensor family_defect(const std::vector<RankOneEpsTensor>& family, const Shape& shape) {
  if (family.empty()) throw std::invalid_argument("family_defect: empty family");
  std::vector<RankOneEpsTensor> signed_family = family;
  signed_family.front().factors.front() *= EpsPolynomial(-1);
  return sum_of_rank_ones(signed_family, shape);
}

EpsTensor expected_defect(const Summands& s) {
  if (s.t2.order() != 4 || s.t2.shape()[3] != 1) throw std::invalid_argument("expected_defect: t2 must be order 4 with dim W4 = 1");
  const Shape& d1 = s.t1.shape();
  EpsTensor::Entries entries;
  for (const auto& [idx, value] : s.t2.entries()) {
    entries.emplace(MultiIndex{idx[0] + d1[0], idx[1] + d1[1], idx[2] + d1[2]}, EpsPolynomial::monomial(value, 3));
  }
  return EpsTensor(family_shape(s), std::move(entries));
}

std::vector<RankOneEpsTensor> build_family(const ConstructionSpec& spec) {
  validate_spec(spec);
  return std::visit(Overloaded{
                        [](const C1Spec& s) {
                          const C1Spec c = canonical_c1(s);
                          return build_c1_family(c.n1, c.n2, c.n3);
                        },
                        [](const C2Spec& s) { return build_c2_family(s.a); },
                        [](const C3Spec&) -> std::vector<RankOneEpsTensor> {
                          throw std::invalid_argument("C3 is certified by its decomposition, not a span family");
                        },
                        [](const C4Spec& s) { return build_c4_family(c4_system(s)); },
                    },
                    spec);
}

VerificationReport verify_c3(std::size_t d, std::size_t n, std::size_t N) {
  const ConstructionSpec spec = C3Spec{d, n, N};
  validate_spec(spec);
  const std::size_t full = ipow(n, d);
  if (N == 0) N = full;
  const C3Decomposition dec = build_c3_decomposition(d, n);
  if (const auto failure = check_c3_expansion(dec)) throw ConstructionError("C3 identity: " + failure->message);

  const Summands s = build_summands(spec);
  const RationalTensor target = s.target();
  if (N < full) {
    // T1 + T2(N) is T1 + T2(n^d) restricted to the first N w-coordinates of factors 1 and 2.
    std::vector<std::vector<std::size_t>> keep(d + 1);
    const RationalTensor big = c3_target(d, n);
    for (std::size_t p = 0; p <= d; ++p) {
      const std::size_t len = p < 2 ? n + N : big.shape()[p];
      keep[p].resize(len);
      for (std::size_t x = 0; x < len; ++x) keep[p][x] = x;
    }
    if (restrict_tensor(big, keep) != target) throw ConstructionError("C3: T1 + T2(N) is not a restriction of the n^d case");
  }
  VerificationReport r;
  r.construction = "C3";
  r.parameters = construction_parameters(spec);
  r.witness_size = dec.witness_size();
  r.lower_bound = border_rank_lower_bound(target);
  r.trivial_additive_bound = s.trivial_bound();
  r.identity_holds = true;
  r.border_rank_upper_confirmed = true;
  r.strict_subadditivity = r.witness_size < r.trivial_additive_bound;
  return r;
}

VerificationReport verify_construction(const ConstructionSpec& spec, const GenericRankOptions& options) {
  validate_spec(spec);
  if (const auto* c3 = std::get_if<C3Spec>(&spec)) return verify_c3(c3->d, c3->n, c3->N);

  const Summands s = build_summands(spec);
  const std::vector<RankOneEpsTensor> family = build_family(spec);
  const RationalTensor target = s.target();
  VerificationReport r;
  r.construction = construction_name(spec);
  r.parameters = construction_parameters(spec);
  r.witness_size = family.size();
  r.lower_bound = border_rank_lower_bound(target);
  r.trivial_additive_bound = s.trivial_bound();
  r.identity_holds = family_defect(family, family_shape(s)) == expected_defect(s);
  const SpanLimitReport span = verify_span_limit_witness(target, family, 3, options);
  r.border_rank_upper_confirmed = span.generic_rank_ok && span.contained;
  r.strict_subadditivity = r.border_rank_upper_confirmed && r.witness_size < r.trivial_additive_bound;
  return r;
}

void write_report(std::ostream& out, const VerificationReport& r) {
  auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "construction = " << r.construction << '\n'
      << "parameters = " << r.parameters << '\n'
      << "witness_size = " << r.witness_size << '\n'
      << "lower_bound = " << r.lower_bound << '\n'
      << "trivial_additive_bound = " << r.trivial_additive_bound << '\n'
      << "identity_holds = " << flag(r.identity_holds) << '\n'
      << "border_rank_upper_confirmed = " << flag(r.border_rank_upper_confirmed) << '\n'
      << "strict_subadditivity = " << flag(r.strict_subadditivity) << '\n';
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  write_report(os, r);
  return os.str();
}

}  // namespace subadd
