// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "subadd/construction_c3.hpp"
#include "subadd/exponent.hpp"
#include "subadd/exponent_grid.hpp"

using namespace subadd;

TEST(Entropy, Values) {
  EXPECT_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(0.0), 0.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  for (double p : {0.01, 0.2, 0.37, 0.49}) EXPECT_NEAR(binary_entropy(p), binary_entropy(1 - p), 1e-15);
  EXPECT_THROW((void)binary_entropy(-0.1), std::domain_error);
  EXPECT_THROW((void)binary_entropy(1.5), std::domain_error);
  EXPECT_THROW((void)binary_entropy(std::nan("")), std::domain_error);
}

TEST(Entropy, Bound) {
  EXPECT_NEAR(entropy_bound(17, 0.5), 3.087462841250339, 1e-12);
  EXPECT_EQ(entropy_bound(2, 0), 1.0);
  EXPECT_EQ(entropy_bound(1, 0.5), -1.0);
  EXPECT_THROW((void)entropy_bound(0.5, 0.5), std::domain_error);
  for (double r : {1.0, 5.0, 81.0}) {
    for (double p : {0.0, 0.1, 0.5, 0.9, 1.0}) {
      const double b = entropy_bound(r, p);
      EXPECT_LE(b, std::log2(r));
      if (p == 0.0 || p == 1.0) EXPECT_EQ(b, std::log2(r));
      else EXPECT_LT(b, std::log2(r));
    }
  }
}

TEST(Schonhage, ThreeByThree) {
  const SchonhageResult r = schonhage_omega(3, 3);
  EXPECT_LE(r.omega_star, 2.55);
  EXPECT_GE(r.p_star, 0.60);
  EXPECT_LE(r.p_star, 0.62);
  // Brute 1e-6 scan done offline: min 2.5479929122044624 at p = 0.619794.
  EXPECT_NEAR(r.omega_star, 2.5479929122044624, 1e-6);
  EXPECT_NEAR(r.p_star, 0.619794, 1e-4);
}

TEST(Schonhage, AgreesWithFineScan) {
  for (const auto [n1, n2] : {std::pair{2u, 2u}, std::pair{3u, 3u}, std::pair{2u, 5u}, std::pair{4u, 4u}}) {
    const SchonhageResult r = schonhage_omega(n1, n2);
    double scan = schonhage_objective(n1, n2, 1e-6);
    for (int k = 2; k < 1000000; ++k) scan = std::min(scan, schonhage_objective(n1, n2, k * 1e-6));
    EXPECT_NEAR(r.omega_star, scan, 1e-6);
    EXPECT_LE(r.omega_star, scan + 1e-12);
    EXPECT_GE(r.omega_star, 2.0);
  }
  EXPECT_NEAR(schonhage_omega(2, 2).omega_star, 2.5938833384731295, 1e-6);
  EXPECT_THROW((void)schonhage_omega(1, 1), std::invalid_argument);
}

TEST(ExtMamu, Values) {
  const BoundPoint b = ext_mamu_bounds(2, 4);
  EXPECT_EQ(b.params[2].value, 2.0);
  EXPECT_DOUBLE_EQ(b.params[3].value, 0.5);
  EXPECT_NEAR(b.omega_sch, 2 * (std::log2(17.0) - 1), 1e-12);
  EXPECT_NEAR(b.omega_triv, 2 + 1 + 2, 1e-12);
  EXPECT_GT(ext_mamu_bounds(2, 100).delta, 0);
  EXPECT_LT(ext_mamu_bounds(100, 4).delta, 0);
  EXPECT_THROW((void)ext_mamu_bounds(2, 3), std::domain_error);
  EXPECT_THROW((void)ext_mamu_bounds(1, 10), std::domain_error);
}

TEST(MultiEmamu, Values) {
  const BoundPoint big = multi_emamu_bounds(4, 10000, 0.5);
  EXPECT_NEAR(big.delta, 2.0, 0.1);
  // Near p = 1 the trivial bound wins once h(p) < log(r / n^d), about 0.043
  // at n = 100; at p = 0.95 the new bound is still ahead.
  EXPECT_GT(multi_emamu_bounds(4, 100, 0.95).delta, 0);
  EXPECT_LT(multi_emamu_bounds(4, 100, 0.999).delta, 0);
  const BoundPoint small = multi_emamu_bounds(3, 2, 0.5);
  EXPECT_NEAR(small.omega_sch, 2 * (std::log2(21.0) - 1), 1e-12);
  EXPECT_NEAR(small.omega_triv, 6.0, 1e-12);
  EXPECT_GT(multi_emamu_p_of_d(3, 100).delta, 0);
  EXPECT_DOUBLE_EQ(multi_emamu_p_of_d(15, 4).params[2].value, 15.0 / 16.0);
  EXPECT_TRUE(std::isfinite(multi_emamu_p_of_d(3, 2).omega_sch));
  EXPECT_THROW((void)multi_emamu_bounds(2, 4, 0.5), std::domain_error);
  EXPECT_THROW((void)multi_emamu_bounds(3, 4, 1.0), std::domain_error);
}

TEST(MultiEmamu, RankCountsMatchDecomposition) {
  for (std::size_t d = 3; d <= 5; ++d) {
    for (std::size_t n = 2; n <= 3; ++n) {
      EXPECT_EQ(c3_border_rank(d, n, C3Count::kVerified), double(build_c3_decomposition(d, n).witness_size()));
    }
  }
  EXPECT_EQ(c3_border_rank(3, 2, C3Count::kPublished), 21.0);
  EXPECT_EQ(c3_border_rank(4, 2, C3Count::kPublished), 45.0);
  EXPECT_EQ(c3_border_rank(4, 2, C3Count::kVerified), 49.0);
}

TEST(Dome, Values) {
  EXPECT_GT(dome_bounds(50, 0.75).delta, 0);
  for (double p : {0.1, 0.3, 0.45}) EXPECT_NEAR(dome_bounds(6, p).omega_sch, dome_bounds(6, 1 - p).omega_sch, 1e-12);
  const BoundPoint b = dome_bounds(2, 0.5);
  EXPECT_NEAR(b.omega_sch, std::log2(28.0) - 1, 1e-12);
  EXPECT_NEAR(b.omega_triv, 1.5 * std::log2(3.0) + 1.5 - 1, 1e-12);
  EXPECT_THROW((void)dome_bounds(3, 0.5), std::domain_error);
  EXPECT_THROW((void)dome_bounds(4, 0.0), std::domain_error);
}

TEST(Bounds, SchonhageMonotoneInEntropy) {
  // Fixed size parameters: larger h(p) means smaller omega_sch.
  for (int k = 1; k < 10; ++k) {
    const double p1 = k / 20.0, p2 = (k + 1) / 20.0;
    EXPECT_GT(dome_bounds(8, p1).omega_sch, dome_bounds(8, p2).omega_sch);
  }
  const double h1 = binary_entropy(0.3), h2 = binary_entropy(0.4);
  EXPECT_LT(h1, h2);
  EXPECT_GT(entropy_bound(45, 0.3), entropy_bound(45, 0.4));
}

TEST(Bounds, BitIdenticalRepeats) {
  const BoundPoint a = multi_emamu_bounds(5, 17, 0.37);
  const BoundPoint b = multi_emamu_bounds(5, 17, 0.37);
  EXPECT_EQ(a.omega_sch, b.omega_sch);
  EXPECT_EQ(a.omega_triv, b.omega_triv);
  EXPECT_EQ(a.delta, a.omega_triv - a.omega_sch);
}

TEST(Ranges, Parse) {
  const Range r = parse_range("2..10:2", true);
  EXPECT_EQ(r.values(), (std::vector<double>{2, 4, 6, 8, 10}));
  EXPECT_EQ(parse_range("7", true).values(), (std::vector<double>{7}));
  EXPECT_EQ(parse_range("0.1..0.3:0.1", false).values().size(), 3u);
  EXPECT_THROW((void)parse_range("5..2", true), std::invalid_argument);
  EXPECT_THROW((void)parse_range("1..4:0", true), std::invalid_argument);
  EXPECT_THROW((void)parse_range("1.5..4", true), std::invalid_argument);
  EXPECT_THROW((void)parse_range("a..b", false), std::invalid_argument);
  EXPECT_THROW((void)parse_range("", false), std::invalid_argument);
}

TEST(Grid, FigureShapes) {
  EXPECT_EQ(generate_grid(figure_defaults(GridFamily::kExtMamu)).size(), 99u * 97u);
  EXPECT_EQ(generate_grid(figure_defaults(GridFamily::kDome)).size(), 25u * 199u);
  EXPECT_EQ(generate_grid(figure_defaults(GridFamily::kMultiEmamuPOfD)).size(), 97u * 13u);
  EXPECT_EQ(generate_grid(figure_defaults(GridFamily::kMultiEmamuFixedD)).size(), 97u * 99u);
}

TEST(Grid, SingleCellAndOrder) {
  GridSpec spec;
  spec.family = GridFamily::kExtMamu;
  spec.axes = {{"n3", parse_range("2..2", true)}, {"n4", parse_range("4..4", true)}};
  const auto one = generate_grid(spec);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].omega_sch, ext_mamu_bounds(2, 4).omega_sch);

  spec.axes = {{"n3", parse_range("2..3", true)}, {"n4", parse_range("4..6", true)}};
  const auto grid = generate_grid(spec);
  ASSERT_EQ(grid.size(), 6u);
  EXPECT_EQ(grid[1].params[1].value, 5.0);
  EXPECT_EQ(grid[3].params[0].value, 3.0);
}

TEST(Grid, JobsDoNotChangeBytes) {
  const GridSpec spec = figure_defaults(GridFamily::kDome);
  std::ostringstream a, b;
  write_csv(a, generate_grid(spec, 1));
  write_csv(b, generate_grid(spec, 4));
  EXPECT_EQ(a.str(), b.str());
}

TEST(Grid, Errors) {
  GridSpec spec;
  spec.family = GridFamily::kDome;
  spec.axes = {{"n", parse_range("2..5", true)}, {"p", parse_range("0.5", false)}};
  EXPECT_THROW((void)generate_grid(spec, 3), std::domain_error);
  spec.axes.pop_back();
  EXPECT_THROW((void)generate_grid(spec), std::invalid_argument);
  EXPECT_THROW((void)parse_family("figure9"), std::invalid_argument);
}

TEST(Grid, CsvAndPpm) {
  GridSpec spec;
  spec.family = GridFamily::kDome;
  spec.axes = {{"n", parse_range("2..4:2", true)}, {"p", parse_range("0.25..0.75:0.25", false)}};
  const auto points = generate_grid(spec);
  std::ostringstream csv;
  write_csv(csv, points);
  const std::string text = csv.str();
  EXPECT_EQ(text.substr(0, text.find('\n')), "family,n,p,omega_triv,omega_sch,delta");
  EXPECT_NE(text.find("\ndome,2,0.25,"), std::string::npos);

  std::ostringstream ppm;
  write_ppm(ppm, spec, points);
  std::istringstream in(ppm.str());
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  EXPECT_EQ(magic, "P3");
  EXPECT_EQ(w, 3);
  EXPECT_EQ(h, 2);
  EXPECT_EQ(maxval, 255);
  for (const auto& b : points) {
    int r = 0, g = 0, bl = 0;
    in >> r >> g >> bl;
    if (b.delta < 0) EXPECT_TRUE(r == 0 && g == 0 && bl > 0);
    if (b.delta > 0) EXPECT_TRUE(r > 0 && bl == 0);
  }
}
