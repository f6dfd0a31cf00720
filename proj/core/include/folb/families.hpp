#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "folb/graph.hpp"

namespace folb {

struct FamilySpec {
  std::string id;
  std::vector<long> params;
};

// Parses "hypercube(3)", "hamming(3,3)", "house" or "euler_A*(2)".
// Throws BadParams on malformed text.
FamilySpec parse_family_spec(const std::string& text);
bool looks_like_family_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);

// Throws BadParams for unknown ids or parameters out of range and MissingData
// for fixtures that ship as data files.
Graph generate(const FamilySpec& spec);
Graph generate(const std::string& spec_text);

struct FamilyInfo {
  std::string id;
  std::string params;       // human readable parameter list
  std::string labeling;     // how vertices are numbered
};
const std::vector<FamilyInfo>& family_catalog();

namespace families {

Graph complete(int n);
Graph complete_bipartite(int a, int b);   // parts 0..a-1 and a..a+b-1
Graph k4_minus();                         // K4 without the edge 0-3
Graph k33_minus();                        // K3,3 without the edge 0-3
Graph path(int n);
Graph cycle(int n);
Graph random_tree(int n, std::uint64_t seed);
Graph star(int leaves);                   // center 0
Graph caterpillar(int spine, int legs);   // spine 0..spine-1, then legs per spine vertex
Graph hypercube(int m);                   // vertex = bitmask
Graph halved_cube(int m);                 // even-weight bitmasks in increasing order
Graph johnson(int m, int k);              // k-subsets in colex order
Graph hamming(const std::vector<int>& radices);  // mixed radix, first coordinate most significant
Graph octahedron(int n);                  // K_{2n} minus the matching {2i, 2i+1}
Graph wheel(int k);                       // rim 0..k-1, center k
Graph almost_wheel(int k);                // wheel without the spoke k-0
Graph three_fan();                        // path 0-1-2-3 plus apex 4
Graph house();                            // square 0-1-2-3 with roof 4 on 2,3
Graph domino();                           // 2x3 grid
Graph grid(int rows, int cols);           // vertex r*cols+c
Graph w4_plus_vertex();                   // wheel(4) plus vertex 5 adjacent to rim vertices 0,1
Graph random_connected(int n, std::uint64_t seed, int edge_percent = 30);

// Coned constructions used to compare interval structures with EF games.
Graph chordal_a(int d);   // path on 4d vertices plus apex 4d
Graph chordal_b(int d);   // path 0..2d-1, cycle 2d..4d-1, apex 4d
Graph dism_a(int d);      // path on 4d vertices plus nonadjacent apexes 4d, 4d+1
Graph dism_b(int d);
Graph johnson_a(int d);   // cycle on 2d vertices plus apex 2d (d odd)
Graph johnson_b(int d);   // two d-cycles plus apex 2d (d odd)
Graph euler_a(int r);     // K_{2,2r}: stable set 0..2r-1, apexes 2r, 2r+1
Graph euler_b(int r);     // K_{2,2r+1}

}  // namespace families

// Loads a bundled forbidden-subgraph list: pseudo_median_H, beineke_F,
// beineke_F_primed or half_hyperbolic_H. Throws MissingData.
std::vector<Graph> forbidden_list(const std::string& name);
std::vector<std::string> forbidden_list_names();

}  // namespace folb
