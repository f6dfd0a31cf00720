#include "folb/graph_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "folb/errors.hpp"
#include "folb/families.hpp"
#include "folb/metric.hpp"

namespace folb {

namespace {

class LineReader {
 public:
  LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++lineno_;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw FormatError(source_ + ":" + std::to_string(lineno_) + ": " + msg);
  }

 private:
  std::istream& in_;
  std::string source_;
  int lineno_ = 0;
};

// Parses exactly `count` integers from a line; trailing garbage is an error.
bool read_ints(const std::string& line, int count, long* out) {
  std::istringstream is(line);
  for (int i = 0; i < count; ++i)
    if (!(is >> out[i])) return false;
  std::string rest;
  return !(is >> rest);
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& source_name) {
  LineReader reader(in, source_name);
  std::string line;
  if (!reader.next(line)) reader.fail("empty graph file");
  long header[2];
  if (!read_ints(line, 2, header)) reader.fail("expected header 'n m'");
  if (header[0] < 0 || header[1] < 0) reader.fail("negative vertex or edge count");
  Graph g(static_cast<int>(header[0]));
  for (long i = 0; i < header[1]; ++i) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(header[1]) + " edges, found " + std::to_string(i));
    long e[2];
    if (!read_ints(line, 2, e)) reader.fail("expected edge 'u v'");
    try {
      g.add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]));
    } catch (const BadParams& err) {
      reader.fail(err.what());
    }
  }
  if (reader.next(line)) reader.fail("unexpected content after the last edge");
  return g;
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "# " << g.name() << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

TernaryRelation read_relation(std::istream& in, const std::string& source_name) {
  LineReader reader(in, source_name);
  std::string line;
  if (!reader.next(line)) reader.fail("empty relation file");
  long m;
  if (!read_ints(line, 1, &m) || m < 0) reader.fail("expected universe size 'm'");
  TernaryRelation r(static_cast<int>(m));
  while (reader.next(line)) {
    long t[3];
    if (!read_ints(line, 3, t)) reader.fail("expected triple 'a b c'");
    for (long x : t)
      if (x < 0 || x >= m) reader.fail("element out of range");
    r.insert(static_cast<int>(t[0]), static_cast<int>(t[1]), static_cast<int>(t[2]));
  }
  return r;
}

Graph load_graph(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    if (!in) throw FormatError("cannot open " + source);
    Graph g = read_graph(in, source);
    g.set_name(std::filesystem::path(source).filename().string());
    return g;
  }
  if (looks_like_family_spec(source)) return generate(source);
  // Anything that is not a family spec names a file.
  throw MissingData("no such graph file: " + source);
}

TernaryRelation load_relation(const std::string& source) {
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::string line;
    while (std::getline(in, line)) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      break;
    }
    std::istringstream probe(line);
    long a;
    int tokens = 0;
    while (probe >> a) ++tokens;
    if (tokens == 1) {
      std::ifstream again(source);
      return read_relation(again, source);
    }
  }
  return TernaryRelation::from_metric(MetricOracle(load_graph(source)));
}

}  // namespace folb
