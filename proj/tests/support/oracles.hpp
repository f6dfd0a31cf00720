#pragma once

// Reference implementations used only by tests. They work from the raw
// adjacency lists with their own breadth-first search and deliberately share
// no code with the library's metric layer.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <vector>

#include "folb/graph.hpp"

namespace oracle {

using folb::Graph;
using folb::Vertex;
using Matrix = std::vector<std::vector<int>>;

inline Matrix distances(const Graph& g) {
  const int n = g.order();
  Matrix d(n, std::vector<int>(n, -1));
  for (Vertex s = 0; s < n; ++s) {
    std::deque<Vertex> queue{s};
    d[s][s] = 0;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w = 0; w < n; ++w)
        if (g.adjacent(v, w) && d[s][w] < 0) {
          d[s][w] = d[s][v] + 1;
          queue.push_back(w);
        }
    }
  }
  return d;
}

inline bool connected(const Graph& g) {
  const Matrix d = distances(g);
  for (const auto& row : d)
    for (int x : row)
      if (x < 0) return false;
  return true;
}

inline bool two_colourable(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w = 0; w < n; ++w) {
        if (!g.adjacent(v, w)) continue;
        if (colour[w] < 0) {
          colour[w] = 1 - colour[v];
          stack.push_back(w);
        } else if (colour[w] == colour[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Depth-first search that fails on reaching a visited vertex other than the parent.
inline bool acyclic(const Graph& g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::function<bool(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
    seen[v] = 1;
    for (Vertex w = 0; w < n; ++w) {
      if (!g.adjacent(v, w) || w == parent) continue;
      if (seen[w] || !dfs(w, v)) return false;
    }
    return true;
  };
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v] && !dfs(v, -1)) return false;
  return true;
}

// The quadrangle condition read off directly from its definition: for
// d(u,x) = d(u,y) = k, x ~ y nonadjacent with common neighbour z at distance
// k+1 from u, there is a common neighbour of x and y at distance k-1 from u.
inline bool quadrangle_condition(const Graph& g) {
  const int n = g.order();
  const Matrix d = distances(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (x == y || d[u][x] != d[u][y] || d[x][y] != 2) continue;
        const int k = d[u][x];
        bool has_far = false, has_near = false;
        for (Vertex z = 0; z < n; ++z) {
          if (!g.adjacent(z, x) || !g.adjacent(z, y)) continue;
          if (d[u][z] == k + 1) has_far = true;
          if (d[u][z] == k - 1) has_near = true;
        }
        if (has_far && !has_near) return false;
      }
  return true;
}

// Triangle condition: adjacent x, y at equal distance k >= 1 from u have a
// common neighbour at distance k-1.
inline bool triangle_condition(const Graph& g) {
  const int n = g.order();
  const Matrix d = distances(g);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (!g.adjacent(x, y) || d[u][x] != d[u][y] || d[u][x] == 0) continue;
        bool found = false;
        for (Vertex z = 0; z < n && !found; ++z)
          found = g.adjacent(z, x) && g.adjacent(z, y) && d[u][z] == d[u][x] - 1;
        if (!found) return false;
      }
  return true;
}

// Every connected induced subgraph keeps the distances of g.
inline bool distance_hereditary_by_subgraphs(const Graph& g) {
  const int n = g.order();
  const Matrix d = distances(g);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1u) keep.push_back(v);
    const Graph h = g.induced(keep);
    const Matrix dh = distances(h);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (dh[i][j] >= 0 && dh[i][j] != d[keep[i]][keep[j]]) return false;
  }
  return true;
}

// Helly property of the family of all balls. A subfamily with pairwise
// intersecting members lies inside a maximal such subfamily, and
// intersections only shrink as members are added, so checking maximal
// pairwise-intersecting families covers every subfamily.
inline bool balls_helly(const Graph& g) {
  const int n = g.order();
  const Matrix d = distances(g);
  using Mask = std::uint32_t;
  std::vector<Mask> balls;
  for (Vertex c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r) {
      Mask b = 0;
      for (Vertex v = 0; v < n; ++v)
        if (d[c][v] <= r) b |= Mask{1} << v;
      if (std::find(balls.begin(), balls.end(), b) == balls.end()) balls.push_back(b);
    }
  const std::size_t k = balls.size();
  bool helly = true;
  std::function<void(std::vector<std::size_t>&, std::vector<std::size_t>, std::vector<std::size_t>)> extend =
      [&](std::vector<std::size_t>& chosen, std::vector<std::size_t> candidates, std::vector<std::size_t> excluded) {
        if (!helly) return;
        if (candidates.empty() && excluded.empty()) {
          Mask all = ~Mask{0};
          for (std::size_t i : chosen) all &= balls[i];
          if (all == 0) helly = false;
          return;
        }
        while (!candidates.empty()) {
          const std::size_t b = candidates.back();
          candidates.pop_back();
          std::vector<std::size_t> next_c, next_x;
          for (std::size_t c : candidates)
            if (balls[c] & balls[b]) next_c.push_back(c);
          for (std::size_t x : excluded)
            if (balls[x] & balls[b]) next_x.push_back(x);
          chosen.push_back(b);
          extend(chosen, next_c, next_x);
          chosen.pop_back();
          excluded.push_back(b);
        }
      };
  std::vector<std::size_t> chosen, all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  extend(chosen, all, {});
  return helly;
}

// Four-point hyperbolicity, doubled so the value is an integer.
inline int twice_hyperbolicity(const Graph& g) {
  const int n = g.order();
  const Matrix d = distances(g);
  int best = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex e = 0; e < n; ++e) {
          int s[3] = {d[a][b] + d[c][e], d[a][c] + d[b][e], d[a][e] + d[b][c]};
          std::sort(s, s + 3);
          best = std::max(best, s[2] - s[1]);
        }
  return best;
}

inline int popcount(unsigned x) { return __builtin_popcount(x); }

}  // namespace oracle
