#include "folb/matroid.hpp"

#include "folb/families.hpp"

namespace folb {

namespace {

Graph interval_subgraph(const MetricOracle& m, Vertex u, Vertex v) { return m.graph().induced(m.interval(u, v)); }

}  // namespace

Check positioning_condition(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      for (Vertex x : g.neighbors(w))
        for (Vertex y : g.neighbors(x))
          for (Vertex z : g.neighbors(y)) {
            if (!is_square(m, w, x, y, z)) continue;
            const bool w_low = m.between(w, z, v) && m.between(w, x, v);
            const bool w_high = m.between(z, w, v) && m.between(x, w, v);
            if ((w_low && !(m.between(z, y, v) && m.between(x, y, v))) ||
                (w_high && !(m.between(y, z, v) && m.between(y, x, v))))
              return Check::fail("positioning_condition", {v, w, x, y, z});
          }
  return Check::pass("positioning_condition");
}

Check positioning_condition_by_sums(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      for (Vertex x : g.neighbors(w))
        for (Vertex y : g.neighbors(x))
          for (Vertex z : g.neighbors(y))
            if (is_square(m, w, x, y, z) && m.dist(v, w) + m.dist(v, y) != m.dist(v, x) + m.dist(v, z))
              return Check::fail("positioning_condition", {v, w, x, y, z});
  return Check::pass("positioning_condition");
}

Check two_interval_condition_3(const MetricOracle& m) {
  static const Graph square = families::cycle(4);
  static const Graph pyramid = families::wheel(4);
  static const Graph octahedron3 = families::octahedron(3);
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v = 0; v < m.order(); ++v) {
      if (m.dist(u, v) != 2) continue;
      const Graph h = interval_subgraph(m, u, v);
      if (!are_isomorphic(h, square) && !are_isomorphic(h, pyramid) && !are_isomorphic(h, octahedron3))
        return Check::fail("two_interval_condition_3", {u, v});
    }
  return Check::pass("two_interval_condition_3");
}

Check two_interval_condition_4(const MetricOracle& m) {
  static const Graph square = families::cycle(4);
  static const Graph octahedron4 = families::octahedron(4);
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v = 0; v < m.order(); ++v) {
      if (m.dist(u, v) != 2) continue;
      const Graph h = interval_subgraph(m, u, v);
      if (!find_induced(h, square) || !find_monomorphism(octahedron4, h))
        return Check::fail("two_interval_condition_4", {u, v});
    }
  return Check::pass("two_interval_condition_4");
}

std::optional<LinkViolation> link_condition_violation(const Graph& g) {
  static const std::vector<Graph> patterns = forbidden_list("beineke_F_primed");
  for (std::size_t i = 0; i < patterns.size(); ++i)
    if (auto e = find_induced(g, patterns[i])) return LinkViolation{i, *e};
  return std::nullopt;
}

}  // namespace folb
