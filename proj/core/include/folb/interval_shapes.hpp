#pragma once

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// Every x in I(u,v) has a partner y with I(x,y) = I(u,v).
bool antipodal_interval(const MetricOracle& m, Vertex u, Vertex v);
// Every vertex x has a gate in I(u,v): a vertex of I(u,v) lying on a shortest
// path from x to each vertex of I(u,v).
bool gated_interval(const MetricOracle& m, Vertex u, Vertex v);
// I(u,v) is a thick median interval: medians of its triples exist inside it
// and each of its pairs at distance two has two common neighbours.
bool cube_interval(const MetricOracle& m, Vertex u, Vertex v);

// Witness x: a vertex without an antipode.
Check is_antipodal_graph(const MetricOracle& m);
inline Check is_thick(const MetricOracle& m) { return thick(m); }

// Antipodal intervals are gated / are cubes. Witness (u, v).
Check antipodal_intervals_gated(const MetricOracle& m);
Check antipodal_intervals_cubes(const MetricOracle& m);

}  // namespace folb
