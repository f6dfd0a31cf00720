#pragma once

#include <iosfwd>
#include <string>

#include "folb/axioms.hpp"
#include "folb/graph.hpp"

namespace folb {

// Edge-list format: first line "n m", then m lines "u v" (0-based). Lines
// starting with '#' are comments. Throws FormatError.
Graph read_graph(std::istream& in, const std::string& source_name = "<input>");
Graph parse_graph(const std::string& text);
void write_graph(std::ostream& out, const Graph& g);

// Relation format: first line "m", then one "a b c" triple per line.
TernaryRelation read_relation(std::istream& in, const std::string& source_name = "<input>");

// An existing file path is read as a graph file; anything else is treated as
// a family spec such as "hypercube(3)". Text that is neither throws
// MissingData.
Graph load_graph(const std::string& source);

// Reads either a graph (converted to its betweenness relation) or a raw
// relation file, deciding by the shape of the first content line.
TernaryRelation load_relation(const std::string& source);

}  // namespace folb
