#pragma once

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// Not expressible in the betweenness logic; a plain algorithmic utility.
// Perfect elimination ordering via maximum cardinality search.
bool is_chordal(const Graph& g);

// Every biconnected component induces a complete graph.
bool blocks_are_cliques(const Graph& g);

// For every triple u, v, w at least two of the inclusions I(u,v) in
// I(u,w) + I(w,v), I(u,w) in I(u,v) + I(v,w), I(v,w) in I(v,u) + I(u,w) hold.
// Witness (u, v, w). The 3-fan passes, so distance hereditary graphs are
// the graphs passing this check without an induced 3-fan.
Check dh_inclusions(const MetricOracle& m);

// Four-point form: of the three distance sums at least two are equal, and if
// the two smallest are equal the largest exceeds them by at most two.
Check distance_hereditary_four_point(const MetricOracle& m);

}  // namespace folb
