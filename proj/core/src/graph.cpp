#include "folb/graph.hpp"

#include <algorithm>
#include <numeric>

#include "folb/errors.hpp"

namespace folb {

Graph::Graph(int n, std::string name)
    : n_(n), adj_(static_cast<std::size_t>(n) * n, 0), nbrs_(n), name_(std::move(name)) {
  if (n < 0) throw BadParams("vertex count must be nonnegative");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges, std::string name) {
  Graph g(n, std::move(name));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw BadParams("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
  if (u == v) throw BadParams("self-loop at vertex " + std::to_string(u));
  if (adjacent(u, v))
    throw BadParams("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
  adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
  // Keep neighbor lists sorted so traversal order is reproducible.
  auto& nu = nbrs_[u];
  nu.insert(std::upper_bound(nu.begin(), nu.end(), v), v);
  auto& nv = nbrs_[v];
  nv.insert(std::upper_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

Vertex Graph::add_vertex() {
  const int m = n_ + 1;
  std::vector<std::uint8_t> grown(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < n_; ++i)
    std::copy_n(adj_.begin() + static_cast<std::ptrdiff_t>(i) * n_, n_,
                grown.begin() + static_cast<std::ptrdiff_t>(i) * m);
  adj_ = std::move(grown);
  nbrs_.emplace_back();
  return n_++;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<char> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : nbrs_[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n_;
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  Graph h(static_cast<int>(vertices.size()));
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j])) h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return h;
}

Graph Graph::induced(const VertexSet& vertices) const {
  std::vector<Vertex> list;
  for (auto i = vertices.find_first(); i != VertexSet::npos; i = vertices.find_next(i))
    list.push_back(static_cast<Vertex>(i));
  return induced(list);
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw BadParams("permutation size mismatch");
  Graph h(n_, name_);
  for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
  return h;
}

Graph Graph::with_universal_vertex() const {
  Graph h = *this;
  Vertex apex = h.add_vertex();
  for (Vertex v = 0; v < apex; ++v) h.add_edge(v, apex);
  return h;
}

}  // namespace folb
