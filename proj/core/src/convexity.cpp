#include "folb/convexity.hpp"

namespace folb {

VertexSet interval_closure_step(const MetricOracle& m, const VertexSet& s) {
  VertexSet out = s;
  const auto members = to_list(s);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) out |= m.interval(members[i], members[j]);
  return out;
}

bool is_convex(const MetricOracle& m, const VertexSet& s) { return interval_closure_step(m, s) == s; }

VertexSet conv_hull(const MetricOracle& m, const VertexSet& s) {
  VertexSet cur = s;
  for (;;) {
    VertexSet next = interval_closure_step(m, cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

Check convex_intervals(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex x = 0; x < n; ++x) {
        if (!m.between(u, x, v)) continue;
        for (Vertex y = 0; y < n; ++y) {
          if (!m.between(u, y, v)) continue;
          for (Vertex z = 0; z < n; ++z)
            if (m.between(x, z, y) && !m.between(u, z, v)) return Check::fail("convex_intervals", {u, v, x, y, z});
        }
      }
  return Check::pass("convex_intervals");
}

Check pasch(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        for (Vertex x = 0; x < n; ++x) {
          if (!m.between(u, x, w)) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (!m.between(v, y, w)) continue;
            bool found = false;
            for (Vertex z = 0; z < n && !found; ++z) found = m.between(u, z, y) && m.between(v, z, x);
            if (!found) return Check::fail("pasch", {u, v, w, x, y});
          }
        }
  return Check::pass("pasch");
}

Check peano(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w)
        for (Vertex x = 0; x < n; ++x) {
          if (!m.between(v, x, w)) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (!m.between(u, y, x)) continue;
            bool found = false;
            for (Vertex z = 0; z < n && !found; ++z) found = m.between(u, z, v) && m.between(w, y, z);
            if (!found) return Check::fail("peano", {u, v, w, x, y});
          }
        }
  return Check::pass("peano");
}

Check sand_glass(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex u1 = 0; u1 < n; ++u1)
        for (Vertex v1 = 0; v1 < n; ++v1)
          for (Vertex x = 0; x < n; ++x) {
            if (!m.between(u, x, v)) continue;
            for (Vertex y = 0; y < n; ++y) {
              if (!m.between(u, y, u1) || !m.between(v, y, v1)) continue;
              bool found = false;
              for (Vertex x1 = 0; x1 < n && !found; ++x1) found = m.between(u1, x1, v1) && m.between(x, y, x1);
              if (!found) return Check::fail("sand_glass", {u, v, u1, v1, x, y});
            }
          }
  return Check::pass("sand_glass");
}

Check triangle_hulls_convex(const MetricOracle& m) {
  const int n = m.order();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w = 0; w < n; ++w) {
        const VertexSet hull = m.interval(u, v) | m.interval(v, w) | m.interval(w, u);
        for (Vertex x = 0; x < n; ++x) {
          if (!hull[x]) continue;
          for (Vertex y = 0; y < n; ++y) {
            if (!hull[y]) continue;
            for (Vertex z = 0; z < n; ++z)
              if (m.between(x, z, y) && !hull[z]) return Check::fail("triangle_hulls_convex", {u, v, w, x, y, z});
          }
        }
      }
  return Check::pass("triangle_hulls_convex");
}

bool interval_inclusion(const MetricOracle& m, Vertex u, Vertex v, Vertex w) {
  for (Vertex x = 0; x < m.order(); ++x)
    if (m.between(u, x, v) && !m.between(u, x, w) && !m.between(w, x, v)) return false;
  return true;
}

}  // namespace folb
