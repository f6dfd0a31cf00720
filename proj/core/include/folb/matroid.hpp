#pragma once

#include "folb/conditions.hpp"
#include "folb/metric.hpp"
#include "folb/subgraph.hpp"

namespace folb {

// For every induced square wxyz and vertex v, the square sits "level" or
// "tilted" relative to v. Witness (v, w, x, y, z).
Check positioning_condition(const MetricOracle& m);
// Same condition stated with distance sums: d(v,w) + d(v,y) = d(v,x) + d(v,z).
Check positioning_condition_by_sums(const MetricOracle& m);

// Every 2-interval induces a square, a square pyramid or a 3-octahedron.
// Witness (u, v).
Check two_interval_condition_3(const MetricOracle& m);
// Every 2-interval contains an induced square and is a subgraph of the
// 4-octahedron. Witness (u, v).
Check two_interval_condition_4(const MetricOracle& m);

// First induced copy of a graph from the coned Beineke list. Throws MissingData
// when the list is not installed.
struct LinkViolation {
  std::size_t pattern = 0;
  Embedding embedding;
};
std::optional<LinkViolation> link_condition_violation(const Graph& g);

}  // namespace folb
