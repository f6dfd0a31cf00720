#pragma once

#include <array>
#include <optional>

#include "folb/metric.hpp"

namespace folb {

// Pairwise intervals of x, y, z meet only at the shared corners.
bool is_metric_triangle(const MetricOracle& m, Vertex x, Vertex y, Vertex z);

// For every edge on a shortest path between two corners, the third corner is
// equidistant from its ends. Callers pass a metric triangle.
bool is_strongly_equilateral(const MetricOracle& m, Vertex x, Vertex y, Vertex z);

// Vertices lying on shortest paths between each pair of x, y, z.
VertexSet medians(const MetricOracle& m, Vertex x, Vertex y, Vertex z);

// Lexicographically least metric triangle (a, b, c) such that x, a, b, y and
// x, a, c, z and y, b, c, z each lie in that order on a geodesic.
std::optional<std::array<Vertex, 3>> quasi_median(const MetricOracle& m, Vertex x, Vertex y, Vertex z);

}  // namespace folb
