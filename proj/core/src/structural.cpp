#include "folb/structural.hpp"

#include <algorithm>
#include <functional>

#include "folb/convexity.hpp"
#include "folb/hyperbolicity.hpp"

namespace folb {

bool is_chordal(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<int> position(n, -1);
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v)
      if (position[v] < 0 && (best < 0 || weight[v] > weight[best])) best = v;
    position[best] = step;
    order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (position[w] < 0) ++weight[w];
  }
  // Reverse of the search order is a perfect elimination ordering iff chordal:
  // the earlier neighbours of each vertex, minus the latest one, must be
  // adjacent to that latest one.
  for (Vertex v : order) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v))
      if (position[w] < position[v] && (parent < 0 || position[w] > position[parent])) parent = w;
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v))
      if (position[w] < position[v] && w != parent && !g.adjacent(w, parent)) return false;
  }
  return true;
}

bool blocks_are_cliques(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  int timer = 0;
  bool ok = true;
  std::function<void(Vertex, Vertex)> visit = [&](Vertex v, Vertex parent) {
    disc[v] = low[v] = timer++;
    for (Vertex w : g.neighbors(v)) {
      if (w == parent) continue;
      if (disc[w] < 0) {
        stack.emplace_back(v, w);
        visit(w, v);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<Vertex> block;
          std::size_t edges = 0;
          for (;;) {
            const Edge e = stack.back();
            stack.pop_back();
            ++edges;
            block.push_back(e.first);
            block.push_back(e.second);
            if (e == Edge{v, w}) break;
          }
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          const std::size_t k = block.size();
          if (edges != k * (k - 1) / 2) ok = false;
        }
      } else if (disc[w] < disc[v]) {
        stack.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] < 0) visit(v, -1);
  return ok;
}

Check dh_inclusions(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        const int holding = int(interval_inclusion(m, u, v, w)) + int(interval_inclusion(m, u, w, v)) +
                            int(interval_inclusion(m, v, w, u));
        if (holding < 2) return Check::fail("dh_inclusions", {u, v, w});
      }
  return Check::pass("dh_inclusions");
}

Check distance_hereditary_four_point(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x = 0; x < n; ++x)
        for (Vertex y = 0; y < n; ++y) {
          const auto s = distance_sums(m, u, v, x, y);
          const bool two_equal = s[0] == s[1] || s[1] == s[2];
          if (!two_equal || (s[1] == s[2] && s[0] - s[1] > 2))
            return Check::fail("distance_hereditary_four_point", {u, v, x, y});
        }
  return Check::pass("distance_hereditary_four_point");
}

}  // namespace folb
