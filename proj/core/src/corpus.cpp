#include "folb/corpus.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "folb/errors.hpp"
#include "folb/families.hpp"

namespace folb::corpus {

namespace {

// Stable coloring by iterated neighbor-color multisets. Colors are ranks of
// sorted signatures, so the result does not depend on vertex labels.
std::vector<int> refine_colors(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nc;
      for (Vertex w : g.neighbors(v)) nc.push_back(color[w]);
      std::sort(nc.begin(), nc.end());
      sig[v].insert(sig[v].end(), nc.begin(), nc.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (static_cast<int>(uniq.size()) == classes) break;
    classes = static_cast<int>(uniq.size());
  }
  return color;
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const int n = g.order();
  if (n > kMaxExhaustiveOrder + 1) throw BadParams("canonical_code supports at most 11 vertices");
  std::vector<int> color = refine_colors(g);
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return std::tie(color[a], a) < std::tie(color[b], b); });
  std::vector<std::pair<int, int>> cells;  // [begin, end) ranges of equal color
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && color[order[j]] == color[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }

  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&] {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    best = std::min(best, code);
  };
  // Odometer over the permutations of every cell.
  auto advance = [&] {
    for (auto it = cells.rbegin(); it != cells.rend(); ++it)
      if (std::next_permutation(order.begin() + it->first, order.begin() + it->second)) return true;
    return false;
  };
  do encode();
  while (advance());
  return best;
}

std::vector<Graph> connected_graphs(int n) {
  if (n < 1 || n > kMaxExhaustiveOrder) throw BadParams("connected_graphs supports 1 <= n <= 10");
  if (n == 1) return {Graph(1, "g1_0")};
  std::map<std::uint64_t, Graph> found;
  for (const Graph& base : connected_graphs(n - 1)) {
    // Every connected graph has a non-cut vertex, so extending each smaller
    // connected graph by a vertex with a nonempty neighborhood reaches them all.
    for (unsigned mask = 1; mask < (1u << (n - 1)); ++mask) {
      Graph g = base;
      Vertex v = g.add_vertex();
      for (Vertex u = 0; u < n - 1; ++u)
        if (mask & (1u << u)) g.add_edge(u, v);
      std::uint64_t code = canonical_code(g);
      found.try_emplace(code, std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  int index = 0;
  for (auto& [code, g] : found) {
    g.set_name("g" + std::to_string(n) + "_" + std::to_string(index++));
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_graphs_up_to(int max_n) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    auto level = connected_graphs(n);
    std::move(level.begin(), level.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Graph> random_connected_graphs(int count, int min_n, int max_n, std::uint64_t seed) {
  if (min_n < 1 || max_n < min_n) throw BadParams("random corpus needs 1 <= min_n <= max_n");
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
    int percent = 10 + static_cast<int>(rng() % 60);
    out.push_back(families::random_connected(n, rng(), percent));
  }
  return out;
}

}  // namespace folb::corpus
