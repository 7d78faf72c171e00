// SPDX-License-Identifier: Apache-2.0
#include "subadd/construction_c3.hpp"

#include <sstream>
#include <stdexcept>

#include "subadd/tensor_families.hpp"
#include "subadd/tensor_ops.hpp"

namespace subadd {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Factors 1, 2: V (n) then W (n^d). Factors 3..d: V (n) then w. Factor d+1:
// V (n^d, indexed like the spider centre) then w.
class C3Layout {
 public:
  C3Layout(std::size_t d, std::size_t n) : d_(d), n_(n), big_(ipow(n, d)) {}

  [[nodiscard]] std::size_t length(std::size_t p) const {
    if (p < 2) return n_ + big_;
    if (p < d_) return n_ + 1;
    return big_ + 1;
  }
  [[nodiscard]] Shape shape() const {
    std::vector<std::size_t> dims(d_ + 1);
    for (std::size_t p = 0; p <= d_; ++p) dims[p] = length(p);
    return Shape(std::move(dims));
  }
  [[nodiscard]] EpsVector v(std::size_t p, std::size_t x, const EpsPolynomial& c = 1) const {
    return EpsVector::basis(length(p), x, c);
  }
  /// w-vector of factor p; `l` only matters for factors 1 and 2.
  [[nodiscard]] EpsVector w(std::size_t p, std::size_t l = 0, const EpsPolynomial& c = 1) const {
    return EpsVector::basis(length(p), (p == d_ ? big_ : n_) + (p < 2 ? l : 0), c);
  }
  [[nodiscard]] EpsVector v_sum(std::size_t p, const EpsPolynomial& c = 1) const {
    EpsVector s(length(p));
    for (std::size_t x = 0; x < n_; ++x) s += v(p, x, c);
    return s;
  }
  /// Spider-centre position of (i_1..i_d).
  [[nodiscard]] std::size_t centre(const MultiIndex& i) const { return row_major(i, std::vector<std::size_t>(d_, n_)); }

  /// Calls f with every index vector in [0,n)^count, row-major order.
  template <class F>
  void for_each_index(std::size_t count, F&& f) const {
    const std::vector<std::size_t> dims(count, n_);
    for (std::size_t pos = 0; pos < ipow(n_, count); ++pos) f(row_major_decode(pos, dims));
  }

 private:
  std::size_t d_, n_, big_;
};

}  // namespace

C3Decomposition build_c3_decomposition(std::size_t d, std::size_t n) {
  if (d < 3) throw std::invalid_argument("build_c3_decomposition: d must be >= 3");
  if (n < 1) throw std::invalid_argument("build_c3_decomposition: n must be >= 1");
  const C3Layout L(d, n);
  const EpsPolynomial eps = EpsPolynomial::eps();
  const EpsPolynomial eps_dm1 = EpsPolynomial::eps(d - 1);
  const EpsPolynomial eps_d = EpsPolynomial::eps(d);

  C3Decomposition dec;
  dec.d = d;
  dec.n = n;
  dec.shape = L.shape();

  L.for_each_index(d, [&](const MultiIndex& i) {
    const std::size_t l = L.centre(i);
    RankOneEpsTensor z;
    z.factors.push_back(L.v(0, i[0]) + L.w(0, l, eps_dm1));
    z.factors.push_back(L.v(1, i[1]) + L.w(1, l, eps_dm1));
    for (std::size_t p = 2; p < d; ++p) z.factors.push_back(L.v(p, i[p], eps) + L.w(p));
    z.factors.push_back(L.v(d, l, eps_d) + L.w(d));
    dec.q.push_back(std::move(z));
  });

  {
    RankOneEpsTensor z;
    z.factors.push_back(L.v_sum(0));
    z.factors.push_back(L.v_sum(1));
    for (std::size_t p = 2; p < d; ++p) z.factors.push_back(L.v_sum(p, eps) + L.w(p, 0, static_cast<long>(n)));
    z.factors.push_back(L.w(d));
    dec.p.push_back(std::move(z));
  }

  // P': exactly one of factors 1, 2 carries w, summed over its own index.
  for (std::size_t side = 0; side < 2; ++side) {
    L.for_each_index(d - 1, [&](const MultiIndex& rest) {
      // rest holds the indices of factors 1..d other than `side`.
      MultiIndex i(d);
      for (std::size_t p = 0, r = 0; p < d; ++p)
        if (p != side) i[p] = rest[r++];
      EpsVector summed(L.length(side));
      for (std::size_t x = 0; x < n; ++x) {
        i[side] = x;
        summed += L.w(side, L.centre(i), eps_dm1);
      }
      RankOneEpsTensor z;
      for (std::size_t p = 0; p < 2; ++p) z.factors.push_back(p == side ? summed : L.v(p, i[p]));
      for (std::size_t p = 2; p < d; ++p) z.factors.push_back(L.v(p, i[p], eps) + L.w(p));
      z.factors.push_back(L.w(d));
      dec.p_prime.push_back(std::move(z));
    });
  }

  // P'': v in factors 1, 2 and d+1, w in some factor of 3..d. Grouped by the
  // first such factor m; factors after m keep both choices and the index of
  // m is summed inside factor d+1.
  for (std::size_t m = 2; m < d; ++m) {
    L.for_each_index(d - 1, [&](const MultiIndex& rest) {
      MultiIndex i(d);
      for (std::size_t p = 0, r = 0; p < d; ++p)
        if (p != m) i[p] = rest[r++];
      RankOneEpsTensor z;
      z.factors.push_back(L.v(0, i[0]));
      z.factors.push_back(L.v(1, i[1]));
      for (std::size_t p = 2; p < d; ++p) {
        if (p < m) z.factors.push_back(L.v(p, i[p], eps));
        else if (p == m) z.factors.push_back(L.w(p));
        else z.factors.push_back(L.v(p, i[p], eps) + L.w(p));
      }
      EpsVector last(L.length(d));
      for (std::size_t x = 0; x < n; ++x) {
        i[m] = x;
        last += L.v(d, L.centre(i), eps_d);
      }
      z.factors.push_back(std::move(last));
      dec.p_dprime.push_back(std::move(z));
    });
  }
  return dec;
}

EpsTensor c3_remainder(const C3Decomposition& dec) {
  EntryAccumulator<EpsPolynomial> acc(dec.shape);
  auto add_all = [&](const std::vector<RankOneEpsTensor>& terms, bool negate) {
    for (const auto& z : terms) {
      const EpsTensor expanded = expand_to_tensor(z);
      for (const auto& [idx, value] : expanded.entries()) {
        if (negate) acc.subtract(idx, value);
        else acc.add(idx, value);
      }
    }
  };
  add_all(dec.q, false);
  add_all(dec.p, true);
  add_all(dec.p_prime, true);
  add_all(dec.p_dprime, true);
  return std::move(acc).build();
}

RationalTensor c3_target(std::size_t d, std::size_t n) {
  const RationalTensor t1 = graph_tensor(spider_graph(std::vector<std::size_t>(d, n)));
  const RationalTensor t2 = graph_tensor(Hypergraph(d + 1, {{{1, 2}, ipow(n, d)}}));
  return direct_sum(t1, t2);
}

std::optional<C3Failure> check_c3_expansion(const C3Decomposition& dec) {
  const std::size_t top = 2 * dec.d - 2;
  const RationalTensor target = c3_target(dec.d, dec.n);
  if (target.shape() != dec.shape) return C3Failure{0, {}, "decomposition shape differs from T1 + T2"};
  const EpsTensor rem = c3_remainder(dec);

  std::optional<C3Failure> worst;
  auto note = [&](std::size_t degree, const MultiIndex& idx, const Rational& got, const Rational& want) {
    if (worst && worst->degree <= degree) return;
    std::ostringstream os;
    os << "coefficient of eps^" << degree << " at (";
    for (std::size_t j = 0; j < idx.size(); ++j) os << (j ? "," : "") << idx[j];
    os << ") is " << got.str() << ", expected " << want.str();
    worst = C3Failure{degree, idx, os.str()};
  };
  for (const auto& [idx, poly] : rem.entries()) {
    for (const auto& [deg, c] : poly.coefficients()) {
      if (deg > top) continue;
      const Rational want = deg == top ? target.at(idx) : Rational(0);
      if (c != want) note(deg, idx, c, want);
    }
  }
  for (const auto& [idx, value] : target.entries()) {
    if (rem.at(idx).coefficient(top).is_zero()) note(top, idx, Rational(0), value);
  }
  return worst;
}

}  // namespace subadd
