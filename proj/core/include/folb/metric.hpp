#pragma once

#include <cstdint>
#include <vector>

#include "folb/graph.hpp"

namespace folb {

// All-pairs hop distances of a connected graph plus the betweenness relation
// derived from them. Immutable once built.
class MetricOracle {
 public:
  // Throws DisconnectedGraph. With dense_betweenness every interval is
  // precomputed as a bitset (n^3 bits); allowed for n <= kDenseLimit.
  explicit MetricOracle(Graph g, bool dense_betweenness = false);

  static constexpr int kDenseLimit = 256;

  int order() const noexcept { return n_; }
  const Graph& graph() const noexcept { return g_; }

  int dist(Vertex u, Vertex v) const noexcept { return dist_[static_cast<std::size_t>(u) * n_ + v]; }
  const std::int32_t* row(Vertex u) const noexcept { return dist_.data() + static_cast<std::size_t>(u) * n_; }

  // x lies on a shortest u-v path.
  bool between(Vertex u, Vertex x, Vertex v) const noexcept {
    if (dense_) return intervals_[static_cast<std::size_t>(u) * n_ + v][x];
    return dist(u, x) + dist(x, v) == dist(u, v);
  }
  bool edge(Vertex u, Vertex v) const noexcept { return dist(u, v) == 1; }

  VertexSet interval(Vertex u, Vertex v) const;
  VertexSet ball(Vertex center, int radius) const;
  VertexSet sphere(Vertex center, int radius) const;
  int diameter() const noexcept { return diameter_; }
  bool has_dense_cache() const noexcept { return dense_; }

 private:
  Graph g_;
  int n_ = 0;
  int diameter_ = 0;
  bool dense_ = false;
  std::vector<std::int32_t> dist_;
  std::vector<VertexSet> intervals_;
};

inline MetricOracle build_metric(const Graph& g, bool dense_betweenness = false) {
  return MetricOracle(g, dense_betweenness);
}

// The edge predicate obtained from betweenness alone: u != v and I(u,v) has no
// vertex besides u and v. Equals adjacency on graphs; kept for cross-checks.
bool edge_from_betweenness(const MetricOracle& m, Vertex u, Vertex v);

// Convenience for the many callers that only need membership tests.
std::vector<Vertex> to_list(const VertexSet& s);
VertexSet make_set(int n, const std::vector<Vertex>& members);

}  // namespace folb
