#include "folb/conditions.hpp"

#include "folb/triangles.hpp"

namespace folb {

bool intervals_meet_only_at(const MetricOracle& m, Vertex v, Vertex x, Vertex y) {
  for (Vertex w = 0; w < m.order(); ++w)
    if (w != v && m.between(x, w, v) && m.between(y, w, v)) return false;
  return true;
}

bool is_triangle(const MetricOracle& m, Vertex x, Vertex y, Vertex z) {
  return m.edge(x, y) && m.edge(y, z) && m.edge(x, z);
}

bool is_square(const MetricOracle& m, Vertex x, Vertex y, Vertex z, Vertex u) {
  return m.edge(x, y) && m.edge(y, z) && m.edge(z, u) && m.edge(u, x) && x != z && y != u && !m.edge(x, z) &&
         !m.edge(y, u);
}

bool is_pentagon(const MetricOracle& m, Vertex x, Vertex y, Vertex z, Vertex u, Vertex v) {
  return m.edge(x, y) && m.edge(y, z) && m.edge(z, u) && m.edge(u, v) && m.edge(v, x) && m.dist(x, z) == 2 &&
         m.dist(x, u) == 2 && m.dist(y, u) == 2 && m.dist(y, v) == 2 && m.dist(z, v) == 2;
}

Check bipartite(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : m.graph().neighbors(u))
      for (Vertex x = 0; x < n; ++x)
        if (m.dist(x, u) == m.dist(x, v)) return Check::fail("bipartite", {u, v, x});
  return Check::pass("bipartite");
}

Check geodesic_parent_unique(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : m.graph().neighbors(u))
      for (Vertex w : m.graph().neighbors(u)) {
        if (v == w) continue;
        for (Vertex x = 0; x < n; ++x)
          if (m.between(x, v, u) && m.between(x, w, u)) return Check::fail("geodesic_parent_unique", {u, v, w, x});
      }
  return Check::pass("geodesic_parent_unique");
}

Check tc(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y : m.graph().neighbors(x)) {
        if (v == x || v == y || !intervals_meet_only_at(m, v, x, y)) continue;
        if (!is_triangle(m, x, y, v)) return Check::fail("tc", {v, x, y});
      }
  return Check::pass("tc");
}

Check qc(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (m.dist(x, y) != 2) continue;
        for (Vertex u : g.neighbors(x)) {
          if (!g.adjacent(u, y)) continue;
          if (!m.between(u, x, v) || !m.between(u, y, v)) continue;
          if (!intervals_meet_only_at(m, v, x, y)) continue;
          if (!is_square(m, u, x, v, y)) return Check::fail("qc", {v, x, y, u});
        }
      }
  return Check::pass("qc");
}

Check tpc(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y : g.neighbors(x)) {
        if (v == x || v == y || !intervals_meet_only_at(m, v, x, y)) continue;
        if (is_triangle(m, x, y, v)) continue;
        bool pentagon = false;
        for (Vertex x1 : g.neighbors(x)) {
          for (Vertex y1 : g.neighbors(y))
            if (is_pentagon(m, x, x1, v, y1, y)) {
              pentagon = true;
              break;
            }
          if (pentagon) break;
        }
        if (!pentagon) return Check::fail("tpc", {v, x, y});
      }
  return Check::pass("tpc");
}

Check inc(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x : g.neighbors(u)) {
        if (!m.between(u, x, v)) continue;
        for (Vertex y : g.neighbors(u))
          if (y != x && m.between(u, y, v) && !g.adjacent(x, y)) return Check::fail("inc", {u, v, x, y});
      }
  return Check::pass("inc");
}

Check aqc(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (m.dist(x, y) != 2) continue;
        for (Vertex u : g.neighbors(x)) {
          if (!g.adjacent(u, y) || !m.between(u, x, v) || !m.between(u, y, v)) continue;
          bool found = false;
          for (Vertex z : g.neighbors(x)) {
            if (!m.between(x, z, v)) continue;
            for (Vertex w : g.neighbors(z))
              if (is_square(m, u, x, z, w)) {
                found = true;
                break;
              }
            if (found) break;
          }
          if (!found) return Check::fail("aqc", {v, x, y, u});
        }
      }
  return Check::pass("aqc");
}

Check qc_minus(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (m.dist(x, y) != 2) continue;
        bool ok = false;
        for (Vertex z : g.neighbors(x))
          if (g.adjacent(z, y) && 2 * m.dist(v, z) <= m.dist(v, x) + m.dist(v, y)) {
            ok = true;
            break;
          }
        if (!ok) return Check::fail("qc_minus", {v, x, y});
      }
  return Check::pass("qc_minus");
}

Check meshed_triangles(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex v = 0; v < n; ++v)
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = 0; y < n; ++y) {
        if (m.dist(x, y) != 2 || !is_metric_triangle(m, v, x, y)) continue;
        bool ok = m.dist(x, v) == 2 && m.dist(y, v) == 2;
        if (ok) {
          ok = false;
          for (Vertex z : g.neighbors(x))
            if (g.adjacent(z, y) && m.dist(z, v) == 2) {
              ok = true;
              break;
            }
        }
        if (!ok) return Check::fail("meshed", {v, x, y});
      }
  return Check::pass("meshed");
}

Check pseudo_modular_triangles(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z) {
        if (!is_metric_triangle(m, x, y, z)) continue;
        if ((x == y && y == z) || is_triangle(m, x, y, z)) continue;
        return Check::fail("pseudo_modular", {x, y, z});
      }
  return Check::pass("pseudo_modular");
}

Check strongly_equilateral_triangles(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        if (is_metric_triangle(m, x, y, z) && !is_strongly_equilateral(m, x, y, z))
          return Check::fail("strongly_equilateral_triangles", {x, y, z});
  return Check::pass("strongly_equilateral_triangles");
}

Check medians_exist(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        if (medians(m, x, y, z).none()) return Check::fail("modular_by_medians", {x, y, z});
  return Check::pass("modular_by_medians");
}

Check thick(const MetricOracle& m) {
  const int n = m.order();
  const Graph& g = m.graph();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (m.dist(u, v) != 2) continue;
      bool ok = false;
      for (Vertex x : g.neighbors(u)) {
        if (!g.adjacent(x, v)) continue;
        for (Vertex y : g.neighbors(u))
          if (y != x && g.adjacent(y, v) && !g.adjacent(x, y)) ok = true;
      }
      if (!ok) return Check::fail("thick", {u, v});
    }
  return Check::pass("thick");
}

}  // namespace folb
