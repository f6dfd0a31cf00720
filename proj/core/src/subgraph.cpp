#include "folb/subgraph.hpp"

#include "folb/errors.hpp"

namespace folb {
namespace {

// Backtracking over pattern vertices 0..k-1, host candidates in increasing
// order, so the first complete assignment found is the least one.
template <class Compatible>
std::optional<Embedding> search(const Graph& g, const Graph& h, Compatible&& compatible) {
  const int k = h.order();
  const int n = g.order();
  if (k == 0) return Embedding{};
  if (k > n) return std::nullopt;

  Embedding image(k, -1);
  std::vector<char> used(n, 0);
  std::vector<int> next(k, 0);
  int i = 0;
  while (i >= 0) {
    if (image[i] >= 0) {
      used[image[i]] = 0;
      image[i] = -1;
    }
    bool placed = false;
    for (Vertex c = next[i]; c < n; ++c) {
      if (used[c] || g.degree(c) < h.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = compatible(j, i, image[j], c);
      if (!ok) continue;
      image[i] = c;
      used[c] = 1;
      next[i] = c + 1;
      placed = true;
      break;
    }
    if (!placed) {
      next[i] = 0;
      --i;
      continue;
    }
    if (i + 1 == k) return image;
    ++i;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Embedding> find_induced(const Graph& g, const Graph& h) {
  return search(g, h, [&](int pj, int pi, Vertex hj, Vertex hi) {
    return h.adjacent(pj, pi) == g.adjacent(hj, hi);
  });
}

std::optional<Embedding> find_monomorphism(const Graph& g, const Graph& h) {
  return search(g, h, [&](int pj, int pi, Vertex hj, Vertex hi) {
    return !h.adjacent(pj, pi) || g.adjacent(hj, hi);
  });
}

std::optional<Embedding> find_isometric(const MetricOracle& g, const Graph& h) {
  if (!h.is_connected()) throw DisconnectedPattern();
  MetricOracle hm(h);
  return search(g.graph(), h, [&](int pj, int pi, Vertex hj, Vertex hi) {
    return hm.dist(pj, pi) == g.dist(hj, hi);
  });
}

std::optional<Embedding> find_isometric(const Graph& g, const Graph& h) {
  if (!h.is_connected()) throw DisconnectedPattern();
  return find_isometric(MetricOracle(g), h);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && find_induced(a, b).has_value();
}

}  // namespace folb
