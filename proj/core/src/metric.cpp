#include "folb/metric.hpp"

#include <algorithm>

#include "folb/errors.hpp"

namespace folb {

MetricOracle::MetricOracle(Graph g, bool dense_betweenness) : g_(std::move(g)), n_(g_.order()) {
  if (dense_betweenness && n_ > kDenseLimit)
    throw BadParams("dense betweenness cache is limited to " + std::to_string(kDenseLimit) + " vertices");
  dist_.assign(static_cast<std::size_t>(n_) * n_, -1);
  std::vector<Vertex> queue(n_);
  for (Vertex s = 0; s < n_; ++s) {
    std::int32_t* d = dist_.data() + static_cast<std::size_t>(s) * n_;
    d[s] = 0;
    std::size_t head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex u = queue[head++];
      for (Vertex w : g_.neighbors(u))
        if (d[w] < 0) {
          d[w] = d[u] + 1;
          queue[tail++] = w;
        }
    }
    if (static_cast<int>(tail) != n_) throw DisconnectedGraph();
    diameter_ = std::max(diameter_, d[queue[tail - 1]]);
  }
  if (dense_betweenness) {
    intervals_.reserve(static_cast<std::size_t>(n_) * n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) intervals_.push_back(interval(u, v));
    dense_ = true;
  }
}

VertexSet MetricOracle::interval(Vertex u, Vertex v) const {
  if (dense_) return intervals_[static_cast<std::size_t>(u) * n_ + v];
  VertexSet s(n_);
  const int duv = dist(u, v);
  const std::int32_t* du = row(u);
  const std::int32_t* dv = row(v);
  for (Vertex x = 0; x < n_; ++x)
    if (du[x] + dv[x] == duv) s.set(x);
  return s;
}

VertexSet MetricOracle::ball(Vertex center, int radius) const {
  VertexSet s(n_);
  const std::int32_t* d = row(center);
  for (Vertex x = 0; x < n_; ++x)
    if (d[x] <= radius) s.set(x);
  return s;
}

VertexSet MetricOracle::sphere(Vertex center, int radius) const {
  VertexSet s(n_);
  const std::int32_t* d = row(center);
  for (Vertex x = 0; x < n_; ++x)
    if (d[x] == radius) s.set(x);
  return s;
}

bool edge_from_betweenness(const MetricOracle& m, Vertex u, Vertex v) {
  if (u == v) return false;
  for (Vertex x = 0; x < m.order(); ++x)
    if (x != u && x != v && m.between(u, x, v)) return false;
  return true;
}

std::vector<Vertex> to_list(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(static_cast<Vertex>(i));
  return out;
}

VertexSet make_set(int n, const std::vector<Vertex>& members) {
  VertexSet s(n);
  for (Vertex v : members) s.set(v);
  return s;
}

}  // namespace folb
