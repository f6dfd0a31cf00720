#include "folb/triangles.hpp"

#include "folb/conditions.hpp"

namespace folb {

bool is_metric_triangle(const MetricOracle& m, Vertex x, Vertex y, Vertex z) {
  return intervals_meet_only_at(m, x, y, z) && intervals_meet_only_at(m, y, x, z) &&
         intervals_meet_only_at(m, z, x, y);
}

namespace {

// No edge uv inside I(a,b) has c strictly closer to one end.
bool side_equidistant(const MetricOracle& m, Vertex a, Vertex b, Vertex c) {
  for (Vertex u = 0; u < m.order(); ++u) {
    if (!m.between(a, u, b)) continue;
    for (Vertex v : m.graph().neighbors(u))
      if (m.between(a, v, b) && m.dist(c, u) != m.dist(c, v)) return false;
  }
  return true;
}

}  // namespace

bool is_strongly_equilateral(const MetricOracle& m, Vertex x, Vertex y, Vertex z) {
  return side_equidistant(m, y, z, x) && side_equidistant(m, x, z, y) && side_equidistant(m, x, y, z);
}

VertexSet medians(const MetricOracle& m, Vertex x, Vertex y, Vertex z) {
  return m.interval(x, y) & m.interval(x, z) & m.interval(y, z);
}

std::optional<std::array<Vertex, 3>> quasi_median(const MetricOracle& m, Vertex x, Vertex y, Vertex z) {
  const int n = m.order();
  for (Vertex a = 0; a < n; ++a) {
    if (!m.between(x, a, y) || !m.between(x, a, z)) continue;
    for (Vertex b = 0; b < n; ++b) {
      if (!m.between(a, b, y) || !m.between(y, b, z)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (!m.between(a, c, z) || !m.between(b, c, z)) continue;
        if (is_metric_triangle(m, a, b, c)) return std::array<Vertex, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

}  // namespace folb
