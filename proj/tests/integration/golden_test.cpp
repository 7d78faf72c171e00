// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "subadd_cli/cli.hpp"

namespace {

std::string golden(const std::string& name) {
  std::ifstream in(std::string(SUBADD_GOLDEN_DIR) + "/" + name, std::ios::binary);
  EXPECT_TRUE(in.good()) << "missing golden file " << name;
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::string stdout_of(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  EXPECT_EQ(subadd::cli::run_cli(args, out, err), 0) << err.str();
  return out.str();
}

struct GoldenCase {
  const char* file;
  std::vector<std::string> args;
};

class Golden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(Golden, MatchesFrozenOutput) { EXPECT_EQ(stdout_of(GetParam().args), golden(GetParam().file)); }

INSTANTIATE_TEST_SUITE_P(
    Frozen, Golden,
    ::testing::Values(
        GoldenCase{"c1_3_3_2.report", {"verify", "--c1", "--n", "3,3,2"}},
        GoldenCase{"c2_2.report", {"verify", "--c2", "--a", "2"}},
        GoldenCase{"c3_3_2.report", {"verify", "--c3", "--d", "3", "--n", "2"}},
        GoldenCase{"c4_2_2_2.report", {"verify", "--c4", "--n", "2,2,2"}},
        GoldenCase{"c2_2.witness", {"verify", "--c2", "--a", "2", "--format", "witness"}},
        GoldenCase{"omega_2_2.txt", {"omega", "--schonhage", "2", "2"}},
        GoldenCase{"ext_mamu_small.csv", {"grid", "--family", "ext_mamu", "--n3", "2..6:2", "--n4", "4..100:32"}},
        GoldenCase{"multi_emamu_small.csv",
                   {"grid", "--family", "multi_emamu_fixed_d", "--d", "3..4", "--n", "2..4", "--p", "0.25..0.75:0.25"}},
        GoldenCase{"multi_emamu_p_of_d_small.csv",
                   {"grid", "--family", "multi_emamu_p_of_d", "--n", "2..4", "--d", "3..15:6"}},
        GoldenCase{"dome_small.csv", {"grid", "--family", "dome", "--n", "2..6:2", "--p", "0.1..0.9:0.2"}},
        GoldenCase{"dome_small.ppm",
                   {"grid", "--family", "dome", "--n", "2..6:2", "--p", "0.1..0.9:0.2", "--format", "ppm"}}),
    [](const ::testing::TestParamInfo<GoldenCase>& info) {
      std::string name = info.param.file;
      for (auto& c : name)
        if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
      return name;
    });

}  // namespace
