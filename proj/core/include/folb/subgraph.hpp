#pragma once

#include <optional>
#include <vector>

#include "folb/graph.hpp"
#include "folb/metric.hpp"

namespace folb {

// embedding[i] is the host vertex that pattern vertex i maps to.
using Embedding = std::vector<Vertex>;

// All searches return the lexicographically least embedding, comparing the
// image tuples (embedding[0], embedding[1], ...).

// Edges and non-edges of h are preserved.
std::optional<Embedding> find_induced(const Graph& g, const Graph& h);
// d_g(f(i),f(j)) = d_h(i,j) for all pairs. Throws DisconnectedPattern when h
// is disconnected and DisconnectedGraph when g is.
std::optional<Embedding> find_isometric(const Graph& g, const Graph& h);
std::optional<Embedding> find_isometric(const MetricOracle& g, const Graph& h);
// Edges of h map to edges of g; non-edges are unconstrained.
std::optional<Embedding> find_monomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace folb
