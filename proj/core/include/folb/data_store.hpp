#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "folb/graph.hpp"

namespace folb {

// Resolution order: $FOLB_DATA_DIR, the source tree this library was built
// from, then the install prefix.
std::filesystem::path data_directory();

// $FOLB_PRELUDE if set, otherwise paper.folb from the data directory.
std::filesystem::path default_prelude_path();

// A graph list file holds blocks
//   graph <label> <n> <m>
//   <m edge lines>
// followed by one trailing line "checksum <entries> <total vertices> <total edges>".
// Counts are validated; throws FormatError on mismatch and MissingData when
// the file is absent.
struct LabeledGraph {
  std::string label;
  Graph graph;
};
std::vector<LabeledGraph> load_graph_list(const std::filesystem::path& file);
void write_graph_list(std::ostream& out, const std::vector<LabeledGraph>& graphs);

}  // namespace folb
