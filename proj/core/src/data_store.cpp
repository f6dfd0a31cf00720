#include "folb/data_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "folb/errors.hpp"

namespace folb {

namespace fs = std::filesystem;

fs::path data_directory() {
  if (const char* env = std::getenv("FOLB_DATA_DIR"); env && *env) return fs::path(env);
  fs::path build_tree(FOLB_BUILD_DATA_DIR);
  if (fs::exists(build_tree / "paper.folb")) return build_tree;
  return fs::path(FOLB_INSTALL_DATA_DIR);
}

fs::path default_prelude_path() {
  if (const char* env = std::getenv("FOLB_PRELUDE"); env && *env) return fs::path(env);
  return data_directory() / "paper.folb";
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

std::vector<LabeledGraph> load_graph_list(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw MissingData("data file not found: " + file.string());
  auto fail = [&](int lineno, const std::string& msg) {
    throw FormatError(file.string() + ":" + std::to_string(lineno) + ": " + msg);
  };

  std::vector<LabeledGraph> out;
  std::string line;
  int lineno = 0;
  long total_v = 0, total_e = 0;
  bool saw_checksum = false;
  while (next_content_line(in, line, lineno)) {
    std::istringstream ls(line);
    std::string keyword;
    ls >> keyword;
    if (keyword == "checksum") {
      long entries = -1, nv = -1, ne = -1;
      if (!(ls >> entries >> nv >> ne)) fail(lineno, "malformed checksum line");
      if (entries != static_cast<long>(out.size()) || nv != total_v || ne != total_e)
        fail(lineno, "checksum mismatch: file records " + std::to_string(entries) + " " + std::to_string(nv) +
                         " " + std::to_string(ne) + ", parsed " + std::to_string(out.size()) + " " +
                         std::to_string(total_v) + " " + std::to_string(total_e));
      saw_checksum = true;
      continue;
    }
    if (keyword != "graph") fail(lineno, "expected 'graph' or 'checksum'");
    if (saw_checksum) fail(lineno, "graph block after checksum");
    std::string label;
    int n = -1, m = -1;
    if (!(ls >> label >> n >> m) || n < 0 || m < 0) fail(lineno, "malformed graph header");
    Graph g(n, label);
    for (int i = 0; i < m; ++i) {
      if (!next_content_line(in, line, lineno)) fail(lineno, "unexpected end of file in " + label);
      std::istringstream es(line);
      int u, v;
      if (!(es >> u >> v)) fail(lineno, "malformed edge line");
      try {
        g.add_edge(u, v);
      } catch (const BadParams& e) {
        fail(lineno, e.what());
      }
    }
    total_v += n;
    total_e += m;
    out.push_back({label, std::move(g)});
  }
  if (!saw_checksum) fail(lineno, "missing checksum line");
  return out;
}

void write_graph_list(std::ostream& out, const std::vector<LabeledGraph>& graphs) {
  long nv = 0, ne = 0;
  for (const auto& [label, g] : graphs) {
    out << "graph " << label << ' ' << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    nv += g.order();
    ne += static_cast<long>(g.size());
  }
  out << "checksum " << graphs.size() << ' ' << nv << ' ' << ne << '\n';
}

}  // namespace folb
