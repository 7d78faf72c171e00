// SPDX-License-Identifier: Apache-2.0
#include "subadd/tensor_ops.hpp"

namespace subadd {

Shape relabeled_shape(const Shape& shape, const Relabeling& r) {
  const std::size_t k = shape.order();
  if (r.index_maps.size() != k) throw std::invalid_argument("relabeling: need one index map per factor");
  std::vector<std::size_t> targets = r.factor_targets;
  if (targets.empty()) {
    targets.resize(k);
    std::iota(targets.begin(), targets.end(), std::size_t{0});
  }
  if (targets.size() != k) throw std::invalid_argument("relabeling: factor permutation has wrong length");
  std::vector<std::size_t> dims(k, 0);
  std::vector<bool> seen_factor(k, false);
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t dest = targets[j];
    if (dest >= k || seen_factor[dest]) throw std::invalid_argument("relabeling: factor map is not a permutation");
    seen_factor[dest] = true;
    const auto& m = r.index_maps[j];
    if (m.size() != shape[j]) throw std::invalid_argument("relabeling: index map length differs from dimension");
    std::vector<bool> hit(m.size(), false);
    for (auto x : m) {
      if (x >= m.size() || hit[x]) throw std::invalid_argument("relabeling: index map is not a bijection");
      hit[x] = true;
    }
    dims[dest] = shape[j];
  }
  return Shape(std::move(dims));
}

Relabeling binomial_square_relabeling(const Shape& t1, const Shape& t2) {
  detail::require_same_order(t1, t2, "binomial_square_relabeling");
  Relabeling r;
  for (std::size_t j = 0; j < t1.order(); ++j) {
    const std::size_t a = t1[j], b = t2[j], n = a + b;
    std::vector<std::size_t> map(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t dest;
        if (x < a && y < a) {
          dest = x * a + y;
        } else if (x < a) {
          dest = a * a + x * b + (y - a);
        } else if (y < a) {
          dest = a * a + a * b + (x - a) * a + y;
        } else {
          dest = a * a + 2 * a * b + (x - a) * b + (y - a);
        }
        map[x * n + y] = dest;
      }
    }
    r.index_maps.push_back(std::move(map));
  }
  return r;
}

bool binomial_expand_check(const RationalTensor& t1, const RationalTensor& t2, int n) {
  if (n != 2) throw std::invalid_argument("binomial_expand_check: only N = 2 is supported");
  const RationalTensor sum = direct_sum(t1, t2);
  const RationalTensor lhs = kronecker(sum, sum);
  const RationalTensor rhs =
      direct_sum(direct_sum(direct_sum(kronecker(t1, t1), kronecker(t1, t2)), kronecker(t2, t1)), kronecker(t2, t2));
  return equal_up_to_bijection(lhs, rhs, binomial_square_relabeling(t1.shape(), t2.shape()));
}

}  // namespace subadd
