#pragma once

#include <string>
#include <vector>

#include "folb/metric.hpp"

namespace folb {

// Outcome of a whole-graph condition. On failure `witness` is the
// lexicographically least counterexample, listed in the order of the leading
// quantifiers of the prelude sentence called `condition`.
struct Check {
  bool holds = true;
  std::string condition;
  std::vector<Vertex> witness;

  explicit operator bool() const noexcept { return holds; }
  static Check pass(std::string condition) { return {true, std::move(condition), {}}; }
  static Check fail(std::string condition, std::vector<Vertex> witness) {
    return {false, std::move(condition), std::move(witness)};
  }
};

// I(x,v) and I(y,v) meet only in v.
bool intervals_meet_only_at(const MetricOracle& m, Vertex v, Vertex x, Vertex y);
bool is_triangle(const MetricOracle& m, Vertex x, Vertex y, Vertex z);
// Induced 4-cycle x-y-z-u.
bool is_square(const MetricOracle& m, Vertex x, Vertex y, Vertex z, Vertex u);
// Induced 5-cycle x-y-z-u-v.
bool is_pentagon(const MetricOracle& m, Vertex x, Vertex y, Vertex z, Vertex u, Vertex v);

Check bipartite(const MetricOracle& m);
Check geodesic_parent_unique(const MetricOracle& m);

// Triangle, quadrangle, triangle-pentagon, interval-neighbourhood and almost
// quadrangle conditions.
Check tc(const MetricOracle& m);
Check qc(const MetricOracle& m);
Check tpc(const MetricOracle& m);
Check inc(const MetricOracle& m);
Check aqc(const MetricOracle& m);
// Every pair at distance two has a common neighbour z with
// 2 d(v,z) <= d(v,x) + d(v,y), for every v. Diagnostic only: no prelude twin.
Check qc_minus(const MetricOracle& m);
// Metric triangles vxy with d(x,y) = 2 are equilateral of size two and x,y
// have a common neighbour at distance two from v.
Check meshed_triangles(const MetricOracle& m);
Check pseudo_modular_triangles(const MetricOracle& m);
Check strongly_equilateral_triangles(const MetricOracle& m);
Check medians_exist(const MetricOracle& m);

Check thick(const MetricOracle& m);

}  // namespace folb
