#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace folb {

using Vertex = int;
using VertexSet = boost::dynamic_bitset<>;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Edges are added during
// construction; afterwards the object is only read.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n, std::string name = {});

  static Graph from_edges(int n, const std::vector<Edge>& edges, std::string name = {});

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<Vertex>& neighbors(Vertex v) const { return nbrs_[v]; }
  int degree(Vertex v) const { return static_cast<int>(nbrs_[v].size()); }

  // Adds uv. Throws BadParams on self-loops, out-of-range endpoints or duplicates.
  void add_edge(Vertex u, Vertex v);
  // Adds a fresh vertex and returns its index.
  Vertex add_vertex();

  std::vector<Edge> edges() const;  // (u,v) with u<v, sorted
  bool is_connected() const;

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  Graph induced(const std::vector<Vertex>& vertices) const;
  Graph induced(const VertexSet& vertices) const;
  // Vertex v of *this becomes perm[v] in the result.
  Graph relabeled(const std::vector<Vertex>& perm) const;
  // Adds one vertex adjacent to every existing vertex.
  Graph with_universal_vertex() const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

 private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::string name_;
};

}  // namespace folb
