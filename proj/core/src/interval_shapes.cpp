#include "folb/interval_shapes.hpp"

namespace folb {

bool antipodal_interval(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet iv = m.interval(u, v);
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x) {
    if (!iv[x]) continue;
    bool found = false;
    for (Vertex y = 0; y < n && !found; ++y) found = m.interval(x, y) == iv;
    if (!found) return false;
  }
  return true;
}

bool gated_interval(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet iv = m.interval(u, v);
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x) {
    bool found = false;
    for (Vertex gate = 0; gate < n && !found; ++gate) {
      if (!iv[gate]) continue;
      found = true;
      for (Vertex y = 0; y < n && found; ++y)
        if (iv[y] && !m.between(x, gate, y)) found = false;
    }
    if (!found) return false;
  }
  return true;
}

bool cube_interval(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet iv = m.interval(u, v);
  const auto inside = to_list(iv);
  for (Vertex x : inside)
    for (Vertex y : inside)
      for (Vertex z : inside) {
        bool found = false;
        for (Vertex c : inside) {
          if (m.between(x, c, y) && m.between(x, c, z) && m.between(y, c, z)) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
  const Graph& g = m.graph();
  for (Vertex x : inside)
    for (Vertex y : inside) {
      if (m.dist(x, y) != 2) continue;
      int common = 0;
      for (Vertex a : g.neighbors(x))
        if (g.adjacent(a, y)) ++common;
      if (common < 2) return false;
    }
  return true;
}

Check is_antipodal_graph(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x) {
    bool found = false;
    for (Vertex y = 0; y < n && !found; ++y) found = m.interval(x, y).all();
    if (!found) return Check::fail("antipodal", {x});
  }
  return Check::pass("antipodal");
}

Check antipodal_intervals_gated(const MetricOracle& m) {
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v = 0; v < m.order(); ++v)
      if (antipodal_interval(m, u, v) && !gated_interval(m, u, v))
        return Check::fail("antipodal_intervals_gated", {u, v});
  return Check::pass("antipodal_intervals_gated");
}

Check antipodal_intervals_cubes(const MetricOracle& m) {
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v = 0; v < m.order(); ++v)
      if (antipodal_interval(m, u, v) && !cube_interval(m, u, v))
        return Check::fail("antipodal_intervals_cubes", {u, v});
  return Check::pass("antipodal_intervals_cubes");
}

}  // namespace folb
