#pragma once

#include <array>
#include <vector>

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// Split of the vertex set by an edge uv: vertices nearer u, nearer v, and
// equidistant. The boundary of a side is the part with a neighbour across.
struct HalfspaceDecomposition {
  Edge edge;
  VertexSet near_u;
  VertexSet near_v;
  VertexSet equidistant;
  VertexSet boundary_u;
  VertexSet boundary_v;
  std::vector<Edge> theta_class;  // edges in relation with uv, sorted
};

// Throws BadParams unless uv is an edge.
HalfspaceDecomposition halfspaces(const MetricOracle& m, Vertex u, Vertex v);

// Djokovic relation between edges xy and uv.
bool theta_related(const MetricOracle& m, Edge a, Edge b);

// Equivalence classes of the relation, or the first (a, b, c) with a~b, b~c
// but not a~c when it is not transitive.
struct ThetaPartition {
  bool transitive = true;
  std::vector<std::vector<Edge>> classes;
  std::array<Edge, 3> violation{};
};
ThetaPartition theta_classes(const MetricOracle& m);

// Per edge: W(u,v), W(v,u) and both equidistant sets, together with their
// complements, are convex. Witness (u, v).
Check w_sets_convex(const MetricOracle& m);
Check partial_hamming(const MetricOracle& m);

// Union of I(a,b) over a, b in the boundary of u's side.
VertexSet boundary_interval(const MetricOracle& m, Vertex u, Vertex v);

// Boundary predicates for an edge uv of a partial cube. Throw NotPartialCube
// otherwise and BadParams if uv is not an edge.
bool ph_stable(const MetricOracle& m, Vertex u, Vertex v);
bool degree3_convex(const MetricOracle& m, Vertex u, Vertex v);
bool boundary_connected(const MetricOracle& m, Vertex u, Vertex v);
bool boundary_isometric(const MetricOracle& m, Vertex u, Vertex v);

// Every ordered edge has ph-stable, degree-3-convex boundary. No partial cube
// precondition. Witness (u, v).
Check boundaries_netlike(const MetricOracle& m);

}  // namespace folb
