#include "folb/helly.hpp"

namespace folb {

Check clique_helly(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y : g.neighbors(x))
      for (Vertex z : g.neighbors(y)) {
        if (!g.adjacent(x, z)) continue;
        VertexSet star(static_cast<std::size_t>(n));
        for (Vertex v = 0; v < n; ++v)
          if (int(g.adjacent(v, x)) + int(g.adjacent(v, y)) + int(g.adjacent(v, z)) >= 2) star.set(v);
        bool dominated = false;
        for (Vertex u = 0; u < n && !dominated; ++u) {
          dominated = true;
          for (Vertex v = 0; v < n && dominated; ++v)
            if (star[v] && v != u && !g.adjacent(u, v)) dominated = false;
        }
        if (!dominated) return Check::fail("clique_helly", {x, y, z});
      }
  return Check::pass("clique_helly");
}

Check c4w4(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex w = 0; w < n; ++w)
    for (Vertex x : g.neighbors(w))
      for (Vertex y : g.neighbors(x))
        for (Vertex z : g.neighbors(y)) {
          if (!is_square(m, w, x, y, z)) continue;
          bool hub = false;
          for (Vertex u : g.neighbors(w))
            if (g.adjacent(u, x) && g.adjacent(u, y) && g.adjacent(u, z)) {
              hub = true;
              break;
            }
          if (!hub) return Check::fail("c4w4", {w, x, y, z});
        }
  return Check::pass("c4w4");
}

std::array<Check, 3> helly_condition_components(const MetricOracle& m) {
  Check weakly_modular = tc(m);
  if (weakly_modular.holds) weakly_modular = qc(m);
  weakly_modular.condition = weakly_modular.holds ? "weakly_modular" : weakly_modular.condition;
  return {clique_helly(m), std::move(weakly_modular), c4w4(m)};
}

}  // namespace folb
