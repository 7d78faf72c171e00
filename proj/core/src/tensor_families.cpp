// SPDX-License-Identifier: Apache-2.0
#include "subadd/tensor_families.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace subadd {

namespace {

std::size_t ipow(std::size_t base, unsigned exp) {
  std::size_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Unit tensor on the (0-based) factor set `in_edge` of an order-k tensor,
// singleton dimension elsewhere.
RationalTensor edge_tensor(std::size_t order, const std::vector<std::size_t>& in_edge, std::size_t weight) {
  std::vector<std::size_t> dims(order, 1);
  for (auto j : in_edge) dims[j] = weight;
  RationalTensor::Entries entries;
  for (std::size_t i = 0; i < weight; ++i) {
    MultiIndex idx(order, 0);
    for (auto j : in_edge) idx[j] = i;
    entries.emplace(std::move(idx), Rational(1));
  }
  return RationalTensor(Shape(std::move(dims)), std::move(entries));
}

}  // namespace

RationalTensor unit_tensor(std::size_t order, std::size_t rank) {
  if (order < 1 || rank < 1) throw std::invalid_argument("unit_tensor: order and rank must be >= 1");
  std::vector<std::size_t> all(order);
  std::iota(all.begin(), all.end(), std::size_t{0});
  return edge_tensor(order, all, rank);
}

RationalTensor mamu(std::size_t m1, std::size_t m2, std::size_t m3) {
  if (m1 < 1 || m2 < 1 || m3 < 1) throw std::invalid_argument("mamu: dimensions must be >= 1");
  RationalTensor::Entries entries;
  for (std::size_t i1 = 0; i1 < m1; ++i1) {
    for (std::size_t i2 = 0; i2 < m2; ++i2) {
      for (std::size_t i3 = 0; i3 < m3; ++i3) {
        entries.emplace(MultiIndex{i1 * m2 + i2, i2 * m3 + i3, i3 * m1 + i1}, Rational(1));
      }
    }
  }
  return RationalTensor(Shape{m1 * m2, m2 * m3, m3 * m1}, std::move(entries));
}

RationalTensor w_state() {
  return RationalTensor(Shape{2, 2, 2}, {{{0, 0, 1}, Rational(1)}, {{0, 1, 0}, Rational(1)}, {{1, 0, 0}, Rational(1)}});
}

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<HyperEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) throw std::invalid_argument("Hypergraph: need at least one vertex");
  for (auto& e : edges_) {
    if (e.vertices.empty()) throw std::invalid_argument("Hypergraph: empty hyperedge");
    if (e.weight < 1) throw std::invalid_argument("Hypergraph: edge weights must be >= 1");
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end()) {
      throw std::invalid_argument("Hypergraph: repeated vertex in hyperedge");
    }
    if (e.vertices.front() < 1 || e.vertices.back() > vertex_count_) {
      throw std::invalid_argument("Hypergraph: vertex outside 1.." + std::to_string(vertex_count_));
    }
  }
}

std::vector<std::size_t> Hypergraph::edges_at(std::size_t factor) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto& v = edges_[e].vertices;
    if (std::find(v.begin(), v.end(), factor + 1) != v.end()) out.push_back(e);
  }
  return out;
}

std::size_t Hypergraph::factor_dim(std::size_t factor) const {
  std::size_t d = 1;
  for (auto e : edges_at(factor)) d *= edges_[e].weight;
  return d;
}

Shape Hypergraph::shape() const {
  std::vector<std::size_t> dims(vertex_count_);
  for (std::size_t j = 0; j < vertex_count_; ++j) dims[j] = factor_dim(j);
  return Shape(std::move(dims));
}

std::size_t Hypergraph::weight_product() const {
  std::size_t p = 1;
  for (const auto& e : edges_) p *= e.weight;
  return p;
}

Hypergraph Hypergraph::with_powered_weights(unsigned power) const {
  std::vector<HyperEdge> edges = edges_;
  for (auto& e : edges) e.weight = ipow(e.weight, power);
  return Hypergraph(vertex_count_, std::move(edges));
}

Hypergraph triangle_graph(std::size_t n12, std::size_t n23, std::size_t n31) {
  return Hypergraph(3, {{{1, 2}, n12}, {{2, 3}, n23}, {{3, 1}, n31}});
}

Hypergraph spider_graph(const std::vector<std::size_t>& legs) {
  const std::size_t center = legs.size() + 1;
  std::vector<HyperEdge> edges;
  for (std::size_t p = 0; p < legs.size(); ++p) edges.push_back({{p + 1, center}, legs[p]});
  return Hypergraph(center, std::move(edges));
}

RationalTensor graph_tensor(const Hypergraph& g) {
  RationalTensor out = unit_tensor(g.vertex_count(), 1);
  for (const auto& e : g.edges()) {
    std::vector<std::size_t> factors;
    for (auto v : e.vertices) factors.push_back(v - 1);
    out = kronecker(out, edge_tensor(g.vertex_count(), factors, e.weight));
  }
  return out;
}

std::vector<std::size_t> graph_coordinate_decode(const Hypergraph& g, std::size_t factor, std::size_t coordinate) {
  const auto at = g.edges_at(factor);
  std::vector<std::size_t> dims;
  for (auto e : at) dims.push_back(g.edges()[e].weight);
  if (dims.empty()) return {};
  return row_major_decode(coordinate, dims);
}

Relabeling triangle_to_mamu_relabeling(std::size_t n12, std::size_t n23, std::size_t n31) {
  // mamu(m1,m2,m3) with m = (n12, n23, n31) pairs its factors as
  // (i12,i23), (i23,i31), (i31,i12); the graph factors are
  // V1 = (i12,i31), V2 = (i12,i23), V3 = (i23,i31) in edge order.
  const Hypergraph g = triangle_graph(n12, n23, n31);
  Relabeling r;
  r.factor_targets = {2, 0, 1};
  r.index_maps.resize(3);
  for (std::size_t j = 0; j < 3; ++j) {
    const std::size_t dim = g.factor_dim(j);
    for (std::size_t x = 0; x < dim; ++x) {
      const auto c = graph_coordinate_decode(g, j, x);
      switch (j) {
        case 0:  // (i12, i31) -> mamu factor 3 coordinate i31 * n12 + i12
          r.index_maps[j].push_back(c[1] * n12 + c[0]);
          break;
        default:  // (i12, i23) and (i23, i31) already match row-major pairs
          r.index_maps[j].push_back(x);
          break;
      }
    }
  }
  return r;
}

Relabeling graph_kronecker_relabeling(const Hypergraph& g, const Hypergraph& h) {
  if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size()) {
    throw std::invalid_argument("graph_kronecker_relabeling: edge structures differ");
  }
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.edges()[e].vertices != h.edges()[e].vertices) {
      throw std::invalid_argument("graph_kronecker_relabeling: edge structures differ");
    }
  }
  Relabeling r;
  for (std::size_t j = 0; j < g.vertex_count(); ++j) {
    const auto at = g.edges_at(j);
    const std::size_t dg = g.factor_dim(j);
    const std::size_t dh = h.factor_dim(j);
    std::vector<std::size_t> product_dims;
    for (auto e : at) product_dims.push_back(g.edges()[e].weight * h.edges()[e].weight);
    std::vector<std::size_t> map(dg * dh);
    for (std::size_t a = 0; a < dg; ++a) {
      const auto ca = graph_coordinate_decode(g, j, a);
      for (std::size_t b = 0; b < dh; ++b) {
        const auto cb = graph_coordinate_decode(h, j, b);
        MultiIndex paired(at.size());
        for (std::size_t q = 0; q < at.size(); ++q) paired[q] = ca[q] * h.edges()[at[q]].weight + cb[q];
        map[a * dh + b] = at.empty() ? 0 : row_major(paired, product_dims);
      }
    }
    r.index_maps.push_back(std::move(map));
  }
  return r;
}

Relabeling mamu_kronecker_relabeling(const std::vector<std::size_t>& m, const std::vector<std::size_t>& mp) {
  if (m.size() != 3 || mp.size() != 3) throw std::invalid_argument("mamu_kronecker_relabeling: need three sizes");
  Relabeling r;
  // Factor f pairs (i_f, i_{f+1}) in mamu.
  for (std::size_t f = 0; f < 3; ++f) {
    const std::size_t a = m[f], b = m[(f + 1) % 3];
    const std::size_t ap = mp[f], bp = mp[(f + 1) % 3];
    std::vector<std::size_t> map(a * b * ap * bp);
    for (std::size_t x = 0; x < a; ++x)
      for (std::size_t y = 0; y < b; ++y)
        for (std::size_t xp = 0; xp < ap; ++xp)
          for (std::size_t yp = 0; yp < bp; ++yp) {
            const std::size_t source = (x * b + y) * (ap * bp) + (xp * bp + yp);
            map[source] = (x * ap + xp) * (b * bp) + (y * bp + yp);
          }
    r.index_maps.push_back(std::move(map));
  }
  return r;
}

}  // namespace subadd
