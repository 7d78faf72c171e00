// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "subadd/eps_polynomial.hpp"

using subadd::EpsPolynomial;
using subadd::PolyOp;
using subadd::Rational;

namespace {

const EpsPolynomial e = EpsPolynomial::eps();

EpsPolynomial random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<long> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::map<EpsPolynomial::Degree, Rational> c;
  const std::size_t terms = deg(rng);
  for (std::size_t t = 0; t <= terms; ++t) c[deg(rng)] = Rational(coeff(rng), 1 + (coeff(rng) + 5) % 3);
  return EpsPolynomial(std::move(c));
}

}  // namespace

TEST(EpsPolynomial, Arithmetic) {
  EXPECT_EQ(poly_arith(1 + e, 1 - e, PolyOp::kMul), 1 - e * e);
  const EpsPolynomial p = 2 + 3 * EpsPolynomial::eps(4);
  EXPECT_EQ(poly_arith(p, 0, PolyOp::kAdd), p);
  EXPECT_EQ(poly_arith(EpsPolynomial::eps(2), 3 * e, PolyOp::kMul), EpsPolynomial::monomial(3, 3));
  EXPECT_TRUE(poly_arith(p, p, PolyOp::kSub).is_zero());
  EXPECT_TRUE(EpsPolynomial(std::map<EpsPolynomial::Degree, Rational>{{3, 0}}).is_zero());
}

TEST(EpsPolynomial, Valuation) {
  EXPECT_EQ((EpsPolynomial::eps(2) + EpsPolynomial::eps(3)).valuation(), 2U);
  EXPECT_EQ(EpsPolynomial(5).valuation(), 0U);
  EXPECT_EQ(EpsPolynomial().valuation(), EpsPolynomial::kInfiniteValuation);
}

TEST(EpsPolynomial, Coefficient) {
  const EpsPolynomial p = 1 + 2 * EpsPolynomial::eps(3);
  EXPECT_EQ(p.coefficient(3), Rational(2));
  EXPECT_EQ(p.coefficient(1), Rational(0));
  EXPECT_EQ(EpsPolynomial().coefficient(0), Rational(0));
}

TEST(EpsPolynomial, ShiftDown) {
  EXPECT_EQ((EpsPolynomial::eps(3) + EpsPolynomial::eps(4)).shift_down(3), 1 + e);
  EXPECT_TRUE(EpsPolynomial().shift_down(5).is_zero());
  EXPECT_THROW((void)e.shift_down(2), std::domain_error);
}

TEST(EpsPolynomial, EvaluateAndDivide) {
  const EpsPolynomial p = 1 - 2 * e + EpsPolynomial::eps(3);
  EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(1, 8));
  EXPECT_EQ(((1 + e) * p).divide_exact(1 + e), p);
  EXPECT_THROW((void)p.divide_exact(1 + e), std::domain_error);
  EXPECT_THROW((void)p.divide_exact(0), std::domain_error);
}

TEST(EpsPolynomial, TextRoundTrip) {
  EXPECT_EQ(EpsPolynomial().str(), "0");
  EXPECT_EQ((1 - e).str(), "1 + -1*e");
  EXPECT_EQ((Rational(1, 2) * EpsPolynomial::eps(3) + e).str(), "1*e + 1/2*e^3");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_poly(rng, 8);
    EXPECT_EQ(EpsPolynomial::parse(p.str()), p) << p.str();
  }
  for (const char* bad : {"", "e", "1 +", "1*x", "2*e^", "1 + + 2"}) {
    EXPECT_THROW((void)EpsPolynomial::parse(bad), std::invalid_argument) << bad;
  }
}

TEST(EpsPolynomialProperty, ValuationIsAdditive) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng, 10), q = random_poly(rng, 10);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).valuation(), p.valuation() + q.valuation());
  }
}

TEST(EpsPolynomialProperty, ShiftDownInvertsShiftUp) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poly(rng, 10);
    const auto d = p.is_zero() ? 4 : p.valuation();
    EXPECT_EQ(p.shift_down(d) * EpsPolynomial::eps(d), p);
  }
}
