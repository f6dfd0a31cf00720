#include "folb/halfspaces.hpp"

#include <algorithm>
#include <functional>

#include "folb/convexity.hpp"
#include "folb/errors.hpp"

namespace folb {

namespace {

void require_edge(const MetricOracle& m, Vertex u, Vertex v) {
  const int n = m.order();
  if (u < 0 || v < 0 || u >= n || v >= n || !m.edge(u, v))
    throw BadParams(std::to_string(u) + " " + std::to_string(v) + " is not an edge");
}

VertexSet nearer(const MetricOracle& m, Vertex u, Vertex v) {
  VertexSet s(static_cast<std::size_t>(m.order()));
  for (Vertex x = 0; x < m.order(); ++x)
    if (m.dist(x, u) < m.dist(x, v)) s.set(x);
  return s;
}

VertexSet boundary_of(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet near_u = nearer(m, u, v);
  const VertexSet near_v = nearer(m, v, u);
  VertexSet b(near_u.size());
  for (Vertex z = 0; z < m.order(); ++z) {
    if (!near_u[z]) continue;
    for (Vertex w : m.graph().neighbors(z))
      if (near_v[w]) {
        b.set(z);
        break;
      }
  }
  return b;
}

bool partial_cube_by_definition(const MetricOracle& m) {
  return bipartite(m).holds && w_sets_convex(m).holds;
}

void require_partial_cube(const MetricOracle& m, Vertex u, Vertex v) {
  require_edge(m, u, v);
  if (!partial_cube_by_definition(m)) throw NotPartialCube();
}

bool ph_stable_raw(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet b = boundary_of(m, u, v);
  const VertexSet ib = boundary_interval(m, u, v);
  const int n = m.order();
  for (Vertex x = 0; x < n; ++x) {
    if (!ib[x]) continue;
    for (Vertex y = 0; y < n; ++y) {
      if (!ib[y]) continue;
      bool found = false;
      for (Vertex w = 0; w < n && !found; ++w) found = b[w] && m.between(x, y, w);
      if (!found) return false;
    }
  }
  return true;
}

bool degree3_convex_raw(const MetricOracle& m, Vertex u, Vertex v) {
  const VertexSet b = boundary_of(m, u, v);
  const VertexSet ib = boundary_interval(m, u, v);
  for (Vertex z = 0; z < m.order(); ++z) {
    if (!ib[z] || b[z]) continue;
    int inside = 0;
    for (Vertex w : m.graph().neighbors(z))
      if (ib[w]) ++inside;
    if (inside >= 3) return false;
  }
  return true;
}

}  // namespace

HalfspaceDecomposition halfspaces(const MetricOracle& m, Vertex u, Vertex v) {
  require_edge(m, u, v);
  HalfspaceDecomposition h;
  h.edge = {u, v};
  h.near_u = nearer(m, u, v);
  h.near_v = nearer(m, v, u);
  h.equidistant = ~(h.near_u | h.near_v);
  h.boundary_u = boundary_of(m, u, v);
  h.boundary_v = boundary_of(m, v, u);
  for (const Edge& e : m.graph().edges())
    if (theta_related(m, {u, v}, e)) h.theta_class.push_back(e);
  return h;
}

bool theta_related(const MetricOracle& m, Edge a, Edge b) {
  const auto [x, y] = a;
  const auto [u, v] = b;
  return m.dist(x, u) + m.dist(y, v) != m.dist(x, v) + m.dist(y, u);
}

ThetaPartition theta_classes(const MetricOracle& m) {
  const std::vector<Edge> edges = m.graph().edges();
  const std::size_t k = edges.size();
  ThetaPartition out;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (!theta_related(m, edges[a], edges[b])) continue;
      for (std::size_t c = 0; c < k; ++c)
        if (theta_related(m, edges[b], edges[c]) && !theta_related(m, edges[a], edges[c])) {
          out.transitive = false;
          out.violation = {edges[a], edges[b], edges[c]};
          return out;
        }
    }
  std::vector<bool> placed(k, false);
  for (std::size_t a = 0; a < k; ++a) {
    if (placed[a]) continue;
    std::vector<Edge> cls;
    for (std::size_t b = a; b < k; ++b)
      if (!placed[b] && theta_related(m, edges[a], edges[b])) {
        placed[b] = true;
        cls.push_back(edges[b]);
      }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

Check w_sets_convex(const MetricOracle& m) {
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v : m.graph().neighbors(u))
      if (!is_convex(m, nearer(m, u, v))) return Check::fail("w_sets_convex", {u, v});
  return Check::pass("w_sets_convex");
}

Check partial_hamming(const MetricOracle& m) {
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v : m.graph().neighbors(u)) {
      const VertexSet near_u = nearer(m, u, v);
      const VertexSet either = near_u | nearer(m, v, u);
      if (!is_convex(m, near_u) || !is_convex(m, ~either) || !is_convex(m, ~near_u) || !is_convex(m, either))
        return Check::fail("partial_hamming", {u, v});
    }
  return Check::pass("partial_hamming");
}

VertexSet boundary_interval(const MetricOracle& m, Vertex u, Vertex v) {
  return interval_closure_step(m, boundary_of(m, u, v));
}

bool ph_stable(const MetricOracle& m, Vertex u, Vertex v) {
  require_partial_cube(m, u, v);
  return ph_stable_raw(m, u, v);
}

bool degree3_convex(const MetricOracle& m, Vertex u, Vertex v) {
  require_partial_cube(m, u, v);
  return degree3_convex_raw(m, u, v);
}

bool boundary_connected(const MetricOracle& m, Vertex u, Vertex v) {
  require_partial_cube(m, u, v);
  return m.graph().induced(boundary_of(m, u, v)).is_connected();
}

bool boundary_isometric(const MetricOracle& m, Vertex u, Vertex v) {
  require_partial_cube(m, u, v);
  const VertexSet b = boundary_of(m, u, v);
  const Graph sub = m.graph().induced(b);
  if (!sub.is_connected()) return false;
  const MetricOracle inner(sub);
  const auto members = to_list(b);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (inner.dist(static_cast<Vertex>(i), static_cast<Vertex>(j)) != m.dist(members[i], members[j])) return false;
  return true;
}

Check boundaries_netlike(const MetricOracle& m) {
  for (Vertex u = 0; u < m.order(); ++u)
    for (Vertex v : m.graph().neighbors(u))
      if (!ph_stable_raw(m, u, v) || !degree3_convex_raw(m, u, v)) return Check::fail("boundaries_netlike", {u, v});
  return Check::pass("boundaries_netlike");
}

}  // namespace folb
