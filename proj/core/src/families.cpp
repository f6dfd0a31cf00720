#include "folb/families.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "folb/data_store.hpp"
#include "folb/errors.hpp"

namespace folb {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw BadParams(what);
}

std::string named(const std::string& id, std::initializer_list<long> params) {
  std::ostringstream os;
  os << id << '(';
  bool first = true;
  for (long p : params) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << ')';
  return os.str();
}

// Adds a vertex adjacent to every vertex in [0, upto).
Vertex add_apex(Graph& g, int upto) {
  Vertex apex = g.add_vertex();
  for (Vertex v = 0; v < upto; ++v) g.add_edge(v, apex);
  return apex;
}

void add_path(Graph& g, Vertex first, int len) {
  for (int i = 0; i + 1 < len; ++i) g.add_edge(first + i, first + i + 1);
}

void add_cycle(Graph& g, Vertex first, int len) {
  add_path(g, first, len);
  g.add_edge(first, first + len - 1);
}

}  // namespace

namespace families {

Graph complete(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  Graph g(n, named("complete", {n}));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete_bipartite(a,b) needs a,b >= 1");
  Graph g(a + b, named("complete_bipartite", {a, b}));
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph k4_minus() {
  Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}, "k4_minus");
  return g;
}

Graph k33_minus() {
  Graph g(6, "k33_minus");
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v)
      if (!(u == 0 && v == 3)) g.add_edge(u, v);
  return g;
}

Graph path(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  Graph g(n, named("path", {n}));
  add_path(g, 0, n);
  return g;
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  Graph g(n, named("cycle", {n}));
  add_cycle(g, 0, n);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree(n,seed) needs n >= 1");
  Graph g(n, named("tree", {n, static_cast<long>(seed)}));
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }
  // Decode a uniformly random Pruefer sequence.
  std::mt19937_64 rng(seed);
  std::vector<int> code(n - 2);
  for (int& c : code) c = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  for (int c : code) {
    int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    g.add_edge(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) rest.push_back(v);
  g.add_edge(rest[0], rest[1]);
  return g;
}

Graph star(int leaves) {
  require(leaves >= 0, "star(k) needs k >= 0");
  Graph g(leaves + 1, named("star", {leaves}));
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph caterpillar(int spine, int legs) {
  require(spine >= 1 && legs >= 0, "caterpillar(spine,legs) needs spine >= 1, legs >= 0");
  Graph g(spine * (1 + legs), named("caterpillar", {spine, legs}));
  add_path(g, 0, spine);
  Vertex next = spine;
  for (int s = 0; s < spine; ++s)
    for (int l = 0; l < legs; ++l) g.add_edge(s, next++);
  return g;
}

Graph hypercube(int m) {
  require(m >= 0 && m <= 16, "hypercube(m) needs 0 <= m <= 16");
  const int n = 1 << m;
  Graph g(n, named("hypercube", {m}));
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < m; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

Graph halved_cube(int m) {
  require(m >= 1 && m <= 16, "halved_cube(m) needs 1 <= m <= 16");
  std::vector<int> verts;
  for (int v = 0; v < (1 << m); ++v)
    if (std::popcount(static_cast<unsigned>(v)) % 2 == 0) verts.push_back(v);
  Graph g(static_cast<int>(verts.size()), named("halved_cube", {m}));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (std::popcount(static_cast<unsigned>(verts[i] ^ verts[j])) == 2)
        g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph johnson(int m, int k) {
  require(m >= 1 && m <= 20 && k >= 0 && k <= m, "johnson(m,k) needs 0 <= k <= m <= 20");
  // Colex order is increasing numeric order of the subset bitmasks.
  std::vector<unsigned> verts;
  for (unsigned v = 0; v < (1u << m); ++v)
    if (std::popcount(v) == k) verts.push_back(v);
  Graph g(static_cast<int>(verts.size()), named("johnson", {m, k}));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j)
      if (std::popcount(verts[i] ^ verts[j]) == 2) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

Graph hamming(const std::vector<int>& radices) {
  require(!radices.empty(), "hamming needs at least one coordinate");
  long n = 1;
  for (int r : radices) {
    require(r >= 1, "hamming coordinates need size >= 1");
    n *= r;
    require(n <= 100000, "hamming graph too large");
  }
  std::string name = "hamming(";
  for (std::size_t i = 0; i < radices.size(); ++i) name += (i ? "," : "") + std::to_string(radices[i]);
  Graph g(static_cast<int>(n), name + ")");
  const int d = static_cast<int>(radices.size());
  auto digits = [&](long v) {
    std::vector<int> out(d);
    for (int i = d - 1; i >= 0; --i) {
      out[i] = static_cast<int>(v % radices[i]);
      v /= radices[i];
    }
    return out;
  };
  std::vector<std::vector<int>> coord(n);
  for (long v = 0; v < n; ++v) coord[v] = digits(v);
  for (long u = 0; u < n; ++u)
    for (long v = u + 1; v < n; ++v) {
      int diff = 0;
      for (int i = 0; i < d && diff < 2; ++i) diff += coord[u][i] != coord[v][i];
      if (diff == 1) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
  return g;
}

Graph octahedron(int n) {
  require(n >= 1, "octahedron(n) needs n >= 1");
  Graph g(2 * n, named("octahedron", {n}));
  for (int u = 0; u < 2 * n; ++u)
    for (int v = u + 1; v < 2 * n; ++v)
      if (u / 2 != v / 2) g.add_edge(u, v);
  return g;
}

Graph wheel(int k) {
  require(k >= 3, "wheel(k) needs k >= 3");
  Graph g(k, named("wheel", {k}));
  add_cycle(g, 0, k);
  add_apex(g, k);
  return g;
}

Graph almost_wheel(int k) {
  require(k >= 3, "almost_wheel(k) needs k >= 3");
  Graph g(k, named("almost_wheel", {k}));
  add_cycle(g, 0, k);
  Vertex c = g.add_vertex();
  for (Vertex v = 1; v < k; ++v) g.add_edge(v, c);
  return g;
}

Graph three_fan() {
  Graph g(4, "three_fan");
  add_path(g, 0, 4);
  add_apex(g, 4);
  return g;
}

Graph house() {
  Graph g = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {2, 4}, {3, 4}}, "house");
  return g;
}

Graph grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid(p,q) needs p,q >= 1");
  Graph g(rows * cols, named("grid", {rows, cols}));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(r * cols + c, r * cols + c + 1);
      if (r + 1 < rows) g.add_edge(r * cols + c, (r + 1) * cols + c);
    }
  return g;
}

Graph domino() {
  Graph g = grid(2, 3);
  g.set_name("domino");
  return g;
}

Graph w4_plus_vertex() {
  Graph g = wheel(4);
  Vertex x = g.add_vertex();
  g.add_edge(0, x);
  g.add_edge(1, x);
  g.set_name("w4_plus_vertex");
  return g;
}

Graph random_connected(int n, std::uint64_t seed, int edge_percent) {
  require(n >= 1, "random_connected(n,seed) needs n >= 1");
  require(edge_percent >= 0 && edge_percent <= 100, "edge percentage must lie in [0,100]");
  std::mt19937_64 rng(seed);
  Graph g(n, named("random_connected", {n, static_cast<long>(seed), edge_percent}));
  // Random recursive tree for connectivity, then independent extra edges.
  for (Vertex v = 1; v < n; ++v) g.add_edge(static_cast<Vertex>(rng() % static_cast<std::uint64_t>(v)), v);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v) && static_cast<int>(rng() % 100) < edge_percent) g.add_edge(u, v);
  return g;
}

Graph chordal_a(int d) {
  require(d >= 1, "chordal_A*(d) needs d >= 1");
  Graph g(4 * d, named("chordal_A*", {d}));
  add_path(g, 0, 4 * d);
  add_apex(g, 4 * d);
  return g;
}

Graph chordal_b(int d) {
  require(d >= 2, "chordal_B*(d) needs d >= 2");
  Graph g(4 * d, named("chordal_B*", {d}));
  add_path(g, 0, 2 * d);
  add_cycle(g, 2 * d, 2 * d);
  add_apex(g, 4 * d);
  return g;
}

Graph dism_a(int d) {
  require(d >= 1, "dism_A*(d) needs d >= 1");
  Graph g(4 * d, named("dism_A*", {d}));
  add_path(g, 0, 4 * d);
  add_apex(g, 4 * d);
  add_apex(g, 4 * d);
  return g;
}

Graph dism_b(int d) {
  require(d >= 2, "dism_B*(d) needs d >= 2");
  Graph g(4 * d, named("dism_B*", {d}));
  add_path(g, 0, 2 * d);
  add_cycle(g, 2 * d, 2 * d);
  add_apex(g, 4 * d);
  add_apex(g, 4 * d);
  return g;
}

Graph johnson_a(int d) {
  require(d >= 3 && d % 2 == 1, "johnson_A*(d) needs odd d >= 3");
  Graph g(2 * d, named("johnson_A*", {d}));
  add_cycle(g, 0, 2 * d);
  add_apex(g, 2 * d);
  return g;
}

Graph johnson_b(int d) {
  require(d >= 3 && d % 2 == 1, "johnson_B*(d) needs odd d >= 3");
  Graph g(2 * d, named("johnson_B*", {d}));
  add_cycle(g, 0, d);
  add_cycle(g, d, d);
  add_apex(g, 2 * d);
  return g;
}

Graph euler_a(int r) {
  require(r >= 1, "euler_A*(r) needs r >= 1");
  Graph g(2 * r, named("euler_A*", {r}));
  add_apex(g, 2 * r);
  add_apex(g, 2 * r);
  return g;
}

Graph euler_b(int r) {
  require(r >= 1, "euler_B*(r) needs r >= 1");
  Graph g(2 * r + 1, named("euler_B*", {r}));
  add_apex(g, 2 * r + 1);
  add_apex(g, 2 * r + 1);
  return g;
}

}  // namespace families

// ---------------------------------------------------------------------------
// Spec parsing and dispatch

bool looks_like_family_spec(const std::string& text) {
  if (text.empty() || !std::isalpha(static_cast<unsigned char>(text[0]))) return false;
  for (char c : text)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '*' || c == '(' || c == ')' ||
          c == ',' || c == ' ' || c == '-'))
      return false;
  return true;
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  auto open = text.find('(');
  auto trim = [](std::string s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  spec.id = trim(text.substr(0, open));
  if (spec.id.empty()) throw BadParams("empty family name in '" + text + "'");
  if (open == std::string::npos) return spec;
  auto close = text.rfind(')');
  if (close == std::string::npos || close < open || !trim(text.substr(close + 1)).empty())
    throw BadParams("unbalanced parentheses in '" + text + "'");
  std::string inner = text.substr(open + 1, close - open - 1);
  if (trim(inner).empty()) return spec;
  std::istringstream is(inner);
  std::string piece;
  while (std::getline(is, piece, ',')) {
    piece = trim(piece);
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(piece, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (piece.empty() || used != piece.size()) throw BadParams("non-integer parameter '" + piece + "' in '" + text + "'");
    spec.params.push_back(value);
  }
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = spec.id;
  if (spec.params.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i ? "," : "") + std::to_string(spec.params[i]);
  return out + ')';
}

namespace {

struct Entry {
  FamilyInfo info;
  int min_arity;
  int max_arity;
  std::function<Graph(const std::vector<long>&)> make;
};

int as_int(long v) {
  if (v < -1000000 || v > 1000000) throw BadParams("parameter out of range: " + std::to_string(v));
  return static_cast<int>(v);
}

Graph dpo_fixture(const char* which) {
  auto file = data_directory() / "fixtures" / (std::string("dpo_") + which + ".txt");
  auto list = load_graph_list(file);
  if (list.size() != 1) throw FormatError(file.string() + ": expected exactly one graph");
  return list.front().graph;
}

const std::vector<Entry>& registry() {
  using namespace families;
  using P = const std::vector<long>&;
  static const std::vector<Entry> table = {
      {{"almost_wheel", "k", "rim 0..k-1, center k, spoke k-0 removed"}, 1, 1, [](P p) { return almost_wheel(as_int(p[0])); }},
      {{"caterpillar", "spine,legs", "spine path first, then legs"}, 2, 2, [](P p) { return caterpillar(as_int(p[0]), as_int(p[1])); }},
      {{"chordal_A*", "d", "path 0..4d-1, apex 4d"}, 1, 1, [](P p) { return chordal_a(as_int(p[0])); }},
      {{"chordal_B*", "d", "path 0..2d-1, cycle 2d..4d-1, apex 4d"}, 1, 1, [](P p) { return chordal_b(as_int(p[0])); }},
      {{"complete", "n", "0..n-1"}, 1, 1, [](P p) { return complete(as_int(p[0])); }},
      {{"complete_bipartite", "a,b", "parts 0..a-1 and a..a+b-1"}, 2, 2, [](P p) { return complete_bipartite(as_int(p[0]), as_int(p[1])); }},
      {{"cycle", "n", "cyclic order"}, 1, 1, [](P p) { return cycle(as_int(p[0])); }},
      {{"dism_A*", "d", "path 0..4d-1, apexes 4d, 4d+1"}, 1, 1, [](P p) { return dism_a(as_int(p[0])); }},
      {{"dism_B*", "d", "path 0..2d-1, cycle 2d..4d-1, apexes 4d, 4d+1"}, 1, 1, [](P p) { return dism_b(as_int(p[0])); }},
      {{"domino", "", "2x3 grid, vertex r*3+c"}, 0, 0, [](P) { return domino(); }},
      {{"dpo_A*", "", "bundled data file"}, 0, 0, [](P) { return dpo_fixture("A"); }},
      {{"dpo_B*", "", "bundled data file"}, 0, 0, [](P) { return dpo_fixture("B"); }},
      {{"euler_A*", "r", "stable set 0..2r-1, apexes 2r, 2r+1"}, 1, 1, [](P p) { return euler_a(as_int(p[0])); }},
      {{"euler_B*", "r", "stable set 0..2r, apexes 2r+1, 2r+2"}, 1, 1, [](P p) { return euler_b(as_int(p[0])); }},
      {{"grid", "p,q", "vertex r*q+c"}, 2, 2, [](P p) { return grid(as_int(p[0]), as_int(p[1])); }},
      {{"halved_cube", "m", "even-weight bitmasks, increasing"}, 1, 1, [](P p) { return halved_cube(as_int(p[0])); }},
      {{"hamming", "m1,...,md", "mixed radix, first coordinate most significant"}, 1, 16,
       [](P p) {
         std::vector<int> r;
         for (long v : p) r.push_back(as_int(v));
         return hamming(r);
       }},
      {{"house", "", "square 0-1-2-3, roof 4 on 2,3"}, 0, 0, [](P) { return house(); }},
      {{"hypercube", "m", "vertex = bitmask"}, 1, 1, [](P p) { return hypercube(as_int(p[0])); }},
      {{"johnson", "m,k", "k-subsets in colex order"}, 2, 2, [](P p) { return johnson(as_int(p[0]), as_int(p[1])); }},
      {{"johnson_A*", "d", "cycle 0..2d-1, apex 2d"}, 1, 1, [](P p) { return johnson_a(as_int(p[0])); }},
      {{"johnson_B*", "d", "cycles 0..d-1 and d..2d-1, apex 2d"}, 1, 1, [](P p) { return johnson_b(as_int(p[0])); }},
      {{"k33_minus", "", "parts 0..2 and 3..5, edge 0-3 removed"}, 0, 0, [](P) { return k33_minus(); }},
      {{"k4_minus", "", "edge 0-3 removed"}, 0, 0, [](P) { return k4_minus(); }},
      {{"octahedron", "n", "K_2n minus matching {2i,2i+1}"}, 1, 1, [](P p) { return octahedron(as_int(p[0])); }},
      {{"path", "n", "0-1-...-(n-1)"}, 1, 1, [](P p) { return path(as_int(p[0])); }},
      {{"random_connected", "n,seed[,percent]", "random recursive tree plus extra edges"}, 2, 3,
       [](P p) {
         return random_connected(as_int(p[0]), static_cast<std::uint64_t>(p[1]), p.size() > 2 ? as_int(p[2]) : 30);
       }},
      {{"star", "k", "center 0, leaves 1..k"}, 1, 1, [](P p) { return star(as_int(p[0])); }},
      {{"three_fan", "", "path 0-1-2-3, apex 4"}, 0, 0, [](P) { return three_fan(); }},
      {{"tree", "n,seed", "random labeled tree (Pruefer code)"}, 2, 2,
       [](P p) { return random_tree(as_int(p[0]), static_cast<std::uint64_t>(p[1])); }},
      {{"w4_plus_vertex", "", "wheel(4) plus vertex 5 on rim edge 0-1"}, 0, 0, [](P) { return w4_plus_vertex(); }},
      {{"wheel", "k", "rim 0..k-1, center k"}, 1, 1, [](P p) { return wheel(as_int(p[0])); }},
  };
  return table;
}

}  // namespace

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> infos = [] {
    std::vector<FamilyInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

Graph generate(const FamilySpec& spec) {
  for (const auto& e : registry()) {
    if (e.info.id != spec.id) continue;
    const int k = static_cast<int>(spec.params.size());
    if (k < e.min_arity || k > e.max_arity)
      throw BadParams(spec.id + " expects parameters (" + e.info.params + "), got " + std::to_string(k));
    Graph g = e.make(spec.params);
    g.set_name(to_string(spec));
    return g;
  }
  throw BadParams("unknown graph family '" + spec.id + "'");
}

Graph generate(const std::string& spec_text) { return generate(parse_family_spec(spec_text)); }

std::vector<std::string> forbidden_list_names() {
  return {"beineke_F", "beineke_F_primed", "half_hyperbolic_H", "pseudo_median_H"};
}

std::vector<Graph> forbidden_list(const std::string& name) {
  if (name == "beineke_F_primed") {
    std::vector<Graph> out;
    for (const Graph& f : forbidden_list("beineke_F")) {
      Graph g = f.with_universal_vertex();
      g.set_name(f.name() + "'");
      out.push_back(std::move(g));
    }
    return out;
  }
  auto names = forbidden_list_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw BadParams("unknown forbidden list '" + name + "'");
  std::vector<Graph> out;
  for (auto& entry : load_graph_list(data_directory() / "forbidden" / (name + ".txt"))) {
    entry.graph.set_name(entry.label);
    out.push_back(std::move(entry.graph));
  }
  return out;
}

}  // namespace folb
