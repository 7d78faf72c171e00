// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "subadd/errors.hpp"
#include "subadd/independence.hpp"

using namespace subadd;

TEST(IndependenceSystem, EvenSizes) {
  for (const Triple n : {Triple{2, 2, 2}, Triple{4, 2, 2}, Triple{2, 4, 2}, Triple{2, 2, 4}, Triple{4, 4, 2},
                         Triple{6, 4, 2}, Triple{4, 4, 4}}) {
    const IndependenceSystem sys = independence_system_even(n[0], n[1], n[2]);
    EXPECT_EQ(sys.size(), n[0] * n[1] * n[2] / 4);
    EXPECT_EQ(sys.violation(), "");
    // Independent recount: all four sets together tile the grid.
    std::set<Triple> cells(sys.J.begin(), sys.J.end());
    for (std::size_t i = 0; i < 3; ++i) {
      for (const auto& k : sys.K(i)) cells.insert(k);
    }
    EXPECT_EQ(cells.size(), n[0] * n[1] * n[2]);
  }
  EXPECT_THROW((void)independence_system_even(3, 2, 2), std::invalid_argument);
  EXPECT_THROW((void)independence_system_even(0, 2, 2), std::invalid_argument);
}

TEST(IndependenceSystem, DetectsViolations) {
  IndependenceSystem sys = independence_system_even(2, 2, 2);
  IndependenceSystem moved = sys;
  // Send J[0] under s1 to a cell with a different first coordinate.
  moved.s[0][sys.J[0]] = Triple{2, 2, 2};
  EXPECT_NE(moved.violation(), "");

  IndependenceSystem overlap = sys;
  overlap.s[1][sys.J[0]] = sys.s[0].at(sys.J[0]);
  EXPECT_NE(overlap.violation(), "");

  IndependenceSystem outside = sys;
  outside.grid = {1, 2, 2};
  EXPECT_NE(outside.violation(), "");
}

TEST(BruteForce, SmallCases) {
  EXPECT_TRUE(brute_force_M(2, 2, 2, 2));
  EXPECT_FALSE(brute_force_M(2, 2, 2, 3));
  EXPECT_TRUE(brute_force_M(2, 2, 2, 0));
  EXPECT_TRUE(brute_force_M(4, 2, 2, 4));
  EXPECT_FALSE(brute_force_M(4, 2, 2, 5));
  EXPECT_FALSE(brute_force_M(1, 1, 4, 1));
  EXPECT_THROW((void)brute_force_M(4, 4, 4, 16), SearchGuardError);
}

TEST(BruteForce, FoundSystemsAreValid) {
  for (const Triple n : {Triple{2, 2, 2}, Triple{1, 2, 3}, Triple{2, 2, 3}, Triple{4, 2, 2}}) {
    const auto sys = find_independence_system(n[0], n[1], n[2], n[0] * n[1] * n[2] / 4);
    ASSERT_TRUE(sys.has_value());
    EXPECT_EQ(sys->violation(), "");
  }
}

TEST(IndependenceSystem, TextRoundTrip) {
  const IndependenceSystem sys = independence_system_even(4, 2, 2);
  std::stringstream ss;
  write_system(ss, sys);
  const IndependenceSystem back = read_system(ss);
  EXPECT_EQ(back.grid, sys.grid);
  EXPECT_EQ(back.J, sys.J);
  EXPECT_EQ(back.s, sys.s);

  std::istringstream bad("grid 2 2 2\nsize 1\n1 1 1 | 1 2 2 2 1 2 | 2 2 1\n");
  EXPECT_THROW((void)read_system(bad), std::invalid_argument);
  std::istringstream truncated("grid 2 2 2\nsize 2\n1 1 1 | 1 2 2 | 2 1 2 | 2 2 1\n");
  EXPECT_THROW((void)read_system(truncated), std::invalid_argument);
}
