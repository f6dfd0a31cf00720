#pragma once

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// I(x,y) is inside s for all x, y in s.
bool is_convex(const MetricOracle& m, const VertexSet& s);
// Smallest convex superset, by closing under intervals until nothing changes.
VertexSet conv_hull(const MetricOracle& m, const VertexSet& s);
// Union of I(x,y) over pairs of s. One step of the hull iteration.
VertexSet interval_closure_step(const MetricOracle& m, const VertexSet& s);

// Interval axioms. Witnesses follow the quantifier order u, v, w, x, y of the
// named sentence (sand_glass: u, v, u1, v1, x, y; convex_intervals: u, v, x, y, z;
// triangle_hulls_convex: u, v, w, x, y, z).
Check convex_intervals(const MetricOracle& m);
Check pasch(const MetricOracle& m);
Check peano(const MetricOracle& m);
Check sand_glass(const MetricOracle& m);
// conv(u,v,w) = I(u,v) + I(v,w) + I(w,u) for every triple.
Check triangle_hulls_convex(const MetricOracle& m);

// I(u,v) is covered by I(u,w) and I(w,v).
bool interval_inclusion(const MetricOracle& m, Vertex u, Vertex v, Vertex w);

}  // namespace folb
