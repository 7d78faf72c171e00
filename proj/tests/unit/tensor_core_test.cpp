// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "subadd/matrix.hpp"
#include "subadd/tensor_families.hpp"
#include "subadd/tensor_io.hpp"
#include "subadd/tensor_ops.hpp"

using namespace subadd;

namespace {

RationalTensor random_tensor(std::mt19937_64& rng, const Shape& shape, std::size_t max_nnz) {
  std::uniform_int_distribution<long> value(-3, 3);
  EntryAccumulator<Rational> acc(shape);
  std::uniform_int_distribution<std::size_t> count(0, max_nnz);
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    MultiIndex idx;
    for (auto d : shape.dims()) idx.push_back(std::uniform_int_distribution<std::size_t>(0, d - 1)(rng));
    acc.add(idx, Rational(value(rng)));
  }
  return std::move(acc).build();
}

Relabeling identity_with_permutation(const Shape& s) { return Relabeling::identity(s); }

}  // namespace

TEST(Shape, RejectsDegenerateDims) {
  EXPECT_THROW(Shape(std::vector<std::size_t>{}), std::invalid_argument);
  EXPECT_THROW((Shape{2, 0, 3}), std::invalid_argument);
  EXPECT_EQ((Shape{2, 3, 4}).without(1), (Shape{2, 4}));
}

TEST(SparseTensor, RejectsOutOfShapeAndPrunesZeros) {
  EXPECT_THROW(RationalTensor(Shape{2, 2}, {{{2, 0}, Rational(1)}}), std::invalid_argument);
  const RationalTensor t(Shape{2, 2}, {{{1, 0}, Rational(0)}, {{0, 1}, Rational(3)}});
  EXPECT_EQ(t.nnz(), 1U);
}

TEST(UnitTensor, Definition) {
  const auto u = unit_tensor(3, 2);
  EXPECT_EQ(u.shape(), (Shape{2, 2, 2}));
  EXPECT_EQ(u.entries(), (RationalTensor::Entries{{{0, 0, 0}, Rational(1)}, {{1, 1, 1}, Rational(1)}}));
  const auto id = unit_tensor(2, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(id.at({i, j}), Rational(i == j ? 1 : 0));
  EXPECT_EQ(unit_tensor(4, 1).entries().begin()->first, (MultiIndex{0, 0, 0, 0}));
}

TEST(Mamu, ShapesAndCounts) {
  EXPECT_EQ(mamu(2, 2, 2).nnz(), 8U);
  EXPECT_EQ(mamu(2, 2, 2).shape(), (Shape{4, 4, 4}));
  EXPECT_EQ(mamu(1, 1, 1), unit_tensor(3, 1));
  EXPECT_EQ(mamu(2, 1, 1).shape(), (Shape{2, 1, 2}));
  EXPECT_EQ(mamu(2, 1, 1).nnz(), 2U);
  // ((i1,i2),(i2,i3),(i3,i1)) with (i1,i2,i3) = (1,2,0) in mamu(2,3,4).
  EXPECT_EQ(mamu(2, 3, 4).at({1 * 3 + 2, 2 * 4 + 0, 0 * 2 + 1}), Rational(1));
}

TEST(GraphTensor, TriangleIsMamu) {
  const auto g = graph_tensor(triangle_graph(2, 3, 4));
  EXPECT_TRUE(equal_up_to_bijection(g, mamu(2, 3, 4), triangle_to_mamu_relabeling(2, 3, 4)));
  // Without rotating factors the triangle is mamu(n31, n12, n23) with the
  // first factor transposed.
  Relabeling transpose = Relabeling::identity(g.shape());
  for (std::size_t i12 = 0; i12 < 2; ++i12)
    for (std::size_t i31 = 0; i31 < 4; ++i31) transpose.index_maps[0][i12 * 4 + i31] = i31 * 2 + i12;
  EXPECT_TRUE(equal_up_to_bijection(g, mamu(4, 2, 3), transpose));
  EXPECT_NE(g, mamu(4, 2, 3));
}

TEST(GraphTensor, SingleHyperedgeIsUnitTensor) {
  EXPECT_EQ(graph_tensor(Hypergraph(4, {{{1, 2, 3, 4}, 5}})), unit_tensor(4, 5));
}

TEST(GraphTensor, AllWeightsOne) {
  const auto t = graph_tensor(Hypergraph(3, {{{1, 2}, 1}, {{2, 3}, 1}}));
  EXPECT_EQ(t.shape(), (Shape{1, 1, 1}));
  EXPECT_EQ(t.nnz(), 1U);
}

TEST(Hypergraph, Validation) {
  EXPECT_THROW(Hypergraph(3, {{{}, 2}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{{1, 4}, 2}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{{0, 1}, 2}}), std::invalid_argument);
  EXPECT_THROW(Hypergraph(3, {{{1, 2}, 0}}), std::invalid_argument);
  EXPECT_EQ(spider_graph({2, 3, 4}).shape(), (Shape{2, 3, 4, 24}));
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(direct_sum(unit_tensor(3, 2), unit_tensor(3, 3)), unit_tensor(3, 5));
  const auto t = mamu(2, 1, 1);
  const auto s = direct_sum(t, RationalTensor(Shape{1, 1, 1}));
  EXPECT_EQ(s.shape(), (Shape{3, 2, 3}));
  EXPECT_EQ(s.entries(), t.entries());
  EXPECT_THROW((void)direct_sum(unit_tensor(2, 2), unit_tensor(3, 2)), std::invalid_argument);
}

TEST(Kronecker, Examples) {
  EXPECT_TRUE(equal_up_to_bijection(kronecker(mamu(2, 2, 2), mamu(2, 2, 2)), mamu(4, 4, 4),
                                    mamu_kronecker_relabeling({2, 2, 2}, {2, 2, 2})));
  const auto t = mamu(2, 3, 1);
  EXPECT_EQ(kronecker(t, unit_tensor(3, 1)), t);
  // u_2(2) x u_2(3) lands on the diagonal of a 6x6 matrix directly.
  EXPECT_EQ(kronecker(unit_tensor(2, 2), unit_tensor(2, 3)), unit_tensor(2, 6));
  EXPECT_THROW((void)kronecker(unit_tensor(2, 2), unit_tensor(3, 2)), std::invalid_argument);
}

TEST(KroneckerProperty, NnzMultipliesAndDirectSumAdds) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto t = random_tensor(rng, Shape{2, 3, 2}, 8);
    const auto s = random_tensor(rng, Shape{3, 1, 2}, 6);
    EXPECT_EQ(kronecker(t, s).nnz(), t.nnz() * s.nnz());
    EXPECT_EQ(direct_sum(t, s).nnz(), t.nnz() + s.nnz());
  }
}

TEST(Relabel, InvalidMapsRejected) {
  const auto t = unit_tensor(3, 2);
  Relabeling r = Relabeling::identity(t.shape());
  r.index_maps[1] = {0, 0};
  EXPECT_THROW((void)relabel(t, r), std::invalid_argument);
  r = Relabeling::identity(t.shape());
  r.factor_targets = {0, 0, 1};
  EXPECT_THROW((void)relabel(t, r), std::invalid_argument);
  EXPECT_THROW((void)equal_up_to_bijection(t, unit_tensor(3, 3), Relabeling::identity(t.shape())),
               std::invalid_argument);
}

TEST(EqualUpToBijection, Examples) {
  const auto t = mamu(2, 3, 2);
  EXPECT_TRUE(equal_up_to_bijection(t, t, identity_with_permutation(t.shape())));
  EXPECT_FALSE(equal_up_to_bijection(unit_tensor(3, 2), w_state(), Relabeling::identity(Shape{2, 2, 2})));
  Relabeling swap = Relabeling::identity(Shape{2, 2, 2});
  swap.index_maps[0] = {1, 0};
  EXPECT_FALSE(equal_up_to_bijection(w_state(), w_state(), swap));
}

TEST(BinomialExpand, Examples) {
  EXPECT_TRUE(binomial_expand_check(unit_tensor(3, 1), unit_tensor(3, 1)));
  EXPECT_TRUE(binomial_expand_check(w_state(), unit_tensor(3, 2)));
  EXPECT_TRUE(binomial_expand_check(mamu(2, 1, 1), mamu(1, 1, 2)));
  EXPECT_THROW((void)binomial_expand_check(w_state(), w_state(), 3), std::invalid_argument);
}

// Independent oracle: the block bijection rebuilt by walking the four
// blocks in order with a running counter instead of the closed form.
TEST(BinomialExpand, BlockWalkOracle) {
  const std::vector<std::pair<RationalTensor, RationalTensor>> pairs = {
      {unit_tensor(3, 1), unit_tensor(3, 1)}, {w_state(), unit_tensor(3, 2)}, {mamu(2, 1, 1), mamu(1, 1, 2)}};
  for (const auto& [t1, t2] : pairs) {
    Relabeling oracle;
    for (std::size_t j = 0; j < t1.order(); ++j) {
      const std::size_t a = t1.shape()[j], n = a + t2.shape()[j];
      std::vector<std::size_t> map(n * n);
      std::size_t counter = 0;
      for (int bx = 0; bx < 2; ++bx)
        for (int by = 0; by < 2; ++by)
          for (std::size_t x = bx ? a : 0; x < (bx ? n : a); ++x)
            for (std::size_t y = by ? a : 0; y < (by ? n : a); ++y) map[x * n + y] = counter++;
      oracle.index_maps.push_back(std::move(map));
    }
    const auto sum = direct_sum(t1, t2);
    const auto rhs = direct_sum(direct_sum(direct_sum(kronecker(t1, t1), kronecker(t1, t2)), kronecker(t2, t1)),
                                kronecker(t2, t2));
    EXPECT_EQ(relabel(kronecker(sum, sum), oracle), rhs);
    EXPECT_EQ(oracle.index_maps, binomial_square_relabeling(t1.shape(), t2.shape()).index_maps);
  }
}

TEST(TensorIo, RoundTrip) {
  const auto t = mamu(2, 1, 2);
  const std::string text = dump_tensor(t);
  EXPECT_EQ(text.substr(0, text.find("0 0")), "order 3\ndims 2 2 4\nscalar-ring Q\n");
  std::istringstream in(text);
  EXPECT_EQ(std::get<RationalTensor>(read_tensor(in)), t);

  const EpsTensor e(Shape{2, 2}, {{{0, 1}, 1 - EpsPolynomial::eps(2)}, {{1, 1}, EpsPolynomial(Rational(1, 3))}});
  std::istringstream in2(dump_tensor(e));
  EXPECT_EQ(std::get<EpsTensor>(read_tensor(in2)), e);

  std::istringstream bad("order 2\ndims 2\nscalar-ring Q\n");
  EXPECT_THROW((void)read_tensor(bad), std::invalid_argument);
}

TEST(EpsTensorHelpers, CoefficientsAndConstants) {
  const EpsTensor e(Shape{2}, {{{0}, 1 + EpsPolynomial::eps(3)}, {{1}, EpsPolynomial::eps()}});
  EXPECT_EQ(max_degree(e), 3U);
  EXPECT_EQ(coefficient_tensor(e, 3).nnz(), 1U);
  EXPECT_THROW((void)require_constant(e), std::invalid_argument);
  EXPECT_EQ(require_constant(to_eps(unit_tensor(2, 2))), unit_tensor(2, 2));
}
