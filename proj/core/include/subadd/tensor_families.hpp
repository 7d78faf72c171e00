// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "subadd/sparse_tensor.hpp"
#include "subadd/tensor_ops.hpp"

namespace subadd {

/// u_k(r): shape (r,...,r), ones on the diagonal.
[[nodiscard]] RationalTensor unit_tensor(std::size_t order, std::size_t rank);

/// Matrix multiplication tensor: ones at ((i1,i2),(i2,i3),(i3,i1)) with
/// pairs packed row-major, shape (m1 m2, m2 m3, m3 m1).
[[nodiscard]] RationalTensor mamu(std::size_t m1, std::size_t m2, std::size_t m3);

/// e001 + e010 + e100 in C^2 x C^2 x C^2.
[[nodiscard]] RationalTensor w_state();

struct HyperEdge {
  std::vector<std::size_t> vertices;  // 1-based, strictly increasing after validation
  std::size_t weight = 1;
};

/// Weighted hypergraph on vertices 1..vertex_count. Edge order matters: it
/// fixes the Kronecker factor order inside each graph-tensor factor.
class Hypergraph {
 public:
  Hypergraph(std::size_t vertex_count, std::vector<HyperEdge> edges);

  [[nodiscard]] std::size_t vertex_count() const { return vertex_count_; }
  [[nodiscard]] const std::vector<HyperEdge>& edges() const { return edges_; }
  /// Indices (into edges()) of the edges containing the 0-based factor j, in order.
  [[nodiscard]] std::vector<std::size_t> edges_at(std::size_t factor) const;
  /// Dimension of factor j: product of the weights of the edges containing it.
  [[nodiscard]] std::size_t factor_dim(std::size_t factor) const;
  [[nodiscard]] Shape shape() const;
  /// Product of all edge weights: the trivial border-rank upper bound.
  [[nodiscard]] std::size_t weight_product() const;
  /// Same edge structure with every weight raised to the given power.
  [[nodiscard]] Hypergraph with_powered_weights(unsigned power) const;

 private:
  std::size_t vertex_count_;
  std::vector<HyperEdge> edges_;
};

/// Edges {1,2}, {2,3}, {3,1} in that order.
[[nodiscard]] Hypergraph triangle_graph(std::size_t n12, std::size_t n23, std::size_t n31);

/// Spider on `legs.size() + 1` vertices: edge {p, center} of weight legs[p-1]
/// for each leg p, center is the last vertex.
[[nodiscard]] Hypergraph spider_graph(const std::vector<std::size_t>& legs);

/// Kronecker product, in edge order, of the edge unit tensors u_(I)(n_I).
[[nodiscard]] RationalTensor graph_tensor(const Hypergraph& g);

/// Splits a coordinate of graph-tensor factor j into per-edge coordinates,
/// returned in the order of edges_at(j).
[[nodiscard]] std::vector<std::size_t> graph_coordinate_decode(const Hypergraph& g, std::size_t factor,
                                                               std::size_t coordinate);

/// Relabeling sending graph_tensor(triangle_graph(n12,n23,n31)) onto
/// mamu(n12,n23,n31) (cyclic factor rotation plus a transpose in one factor).
[[nodiscard]] Relabeling triangle_to_mamu_relabeling(std::size_t n12, std::size_t n23, std::size_t n31);

/// Relabeling sending graph_tensor(g) x graph_tensor(h) onto the graph tensor
/// with product weights. g and h must share their edge structure.
[[nodiscard]] Relabeling graph_kronecker_relabeling(const Hypergraph& g, const Hypergraph& h);

/// Relabeling sending mamu(m) x mamu(m') onto mamu(m1 m1', m2 m2', m3 m3').
[[nodiscard]] Relabeling mamu_kronecker_relabeling(const std::vector<std::size_t>& m,
                                                   const std::vector<std::size_t>& m_prime);

}  // namespace subadd
