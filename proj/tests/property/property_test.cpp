// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "../support/property_suites.hpp"
#include "subadd/construction_c3.hpp"
#include "subadd/constructions.hpp"
#include "subadd/independence.hpp"

using namespace subadd;
using namespace subadd::testing;

TEST(LimitSpanProperty, InvarianceOnRandomFamilies) {
  for (std::uint64_t seed : {1u, 2u}) {
    const SuiteResult r = limit_span_invariance_suite(seed, 50, 6, 4);
    EXPECT_TRUE(r.ok()) << "seed " << seed << ": " << r.failure;
    EXPECT_EQ(r.cases, 50u);
  }
}

TEST(GraphTensorProperty, SelfReproduction) {
  const SuiteResult r = self_reproduction_suite(3);
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_GT(r.cases, 100u);
}

TEST(GraphTensorProperty, TriangleIsMamu) {
  const SuiteResult r = triangle_mamu_suite(3);
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_EQ(r.cases, 27u + 81u);
}

TEST(GraphTensorProperty, BinomialExpansion) {
  const SuiteResult r = binomial_suite();
  EXPECT_TRUE(r.ok()) << r.failure;
  EXPECT_EQ(r.cases, 3u);
}

TEST(C3Property, CountsAndIdentity) {
  for (std::size_t d = 3; d <= 5; ++d) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const C3Decomposition dec = build_c3_decomposition(d, n);
      std::size_t nd = 1, nd1 = 1, published = n * n;
      for (std::size_t k = 0; k < d; ++k) nd *= n;
      for (std::size_t k = 0; k + 1 < d; ++k) nd1 *= n;
      for (std::size_t k = 3; k < d; ++k) published *= n + 1;
      EXPECT_EQ(dec.q.size(), nd);
      EXPECT_EQ(dec.p.size(), 1u);
      EXPECT_LE(dec.p_prime.size(), 2 * nd1);
      EXPECT_EQ(dec.p_dprime.size(), (d - 2) * nd1);
      // The published P'' bound holds at d = 3 and for n = 1 only.
      EXPECT_EQ(dec.p_dprime.size() <= published, d == 3 || n == 1) << "d=" << d << " n=" << n;
      const auto failure = check_c3_expansion(dec);
      EXPECT_FALSE(failure.has_value()) << "d=" << d << " n=" << n << ": " << failure->message;
    }
  }
}

TEST(LemmaProperty, AgreesWithBruteForce) {
  for (const Triple n : {Triple{2, 2, 2}, Triple{4, 2, 2}, Triple{2, 4, 2}, Triple{2, 2, 4}}) {
    const std::size_t m = n[0] * n[1] * n[2] / 4;
    EXPECT_EQ(independence_system_even(n[0], n[1], n[2]).size(), m);
    EXPECT_TRUE(brute_force_M(n[0], n[1], n[2], m));
    EXPECT_FALSE(brute_force_M(n[0], n[1], n[2], m + 1));
  }
}

TEST(ConstructionProperty, LowerBoundMeetsWitness) {
  const std::vector<ConstructionSpec> specs = {
      C1Spec{3, 2, 2}, C1Spec{3, 3, 2}, C1Spec{3, 2, 3}, C1Spec{5, 2, 2}, C1Spec{3, 3, 3},
      C2Spec{2},       C2Spec{3},       C2Spec{4},       C2Spec{5},
      C4Spec{2, 2, 2, std::nullopt},    C4Spec{4, 2, 2, std::nullopt},    C4Spec{2, 2, 4, std::nullopt},
  };
  for (const auto& spec : specs) {
    const VerificationReport r = verify_construction(spec);
    EXPECT_TRUE(r.border_rank_upper_confirmed) << report_text(r);
    EXPECT_TRUE(r.identity_holds) << report_text(r);
    EXPECT_EQ(r.lower_bound, r.witness_size) << report_text(r);
  }
}
