#pragma once

#include <cstdint>
#include <vector>

#include "folb/graph.hpp"

namespace folb {

// Exhaustive and random corpora for property tests and audits.
namespace corpus {

constexpr int kMaxExhaustiveOrder = 10;

// One representative per isomorphism class of connected graphs on n vertices,
// in a fixed order. Counts for n = 1..8: 1, 1, 2, 6, 21, 112, 853, 11117.
std::vector<Graph> connected_graphs(int n);
// Concatenation of connected_graphs(1..max_n).
std::vector<Graph> connected_graphs_up_to(int max_n);

// `count` seeded random connected graphs with orders drawn from [min_n, max_n].
std::vector<Graph> random_connected_graphs(int count, int min_n, int max_n, std::uint64_t seed);

// Isomorphism invariant code for graphs with at most kMaxExhaustiveOrder + 1
// vertices: equal codes iff isomorphic (for equal orders).
std::uint64_t canonical_code(const Graph& g);

}  // namespace corpus
}  // namespace folb
