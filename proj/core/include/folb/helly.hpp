#pragma once

#include <array>

#include "folb/conditions.hpp"
#include "folb/metric.hpp"

namespace folb {

// For every triangle xyz, the vertices adjacent to at least two of x, y, z
// are dominated by one vertex. Witness (x, y, z).
Check clique_helly(const MetricOracle& m);
// Every induced square wxyz has a common neighbour of all four corners.
// Witness (w, x, y, z).
Check c4w4(const MetricOracle& m);

// The three conditions whose conjunction characterises Helly graphs, in the
// order clique_helly, weakly_modular, c4w4.
std::array<Check, 3> helly_condition_components(const MetricOracle& m);

}  // namespace folb
