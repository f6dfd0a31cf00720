#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "folb/corpus.hpp"
#include "folb/data_store.hpp"
#include "folb/errors.hpp"
#include "folb/evaluator.hpp"
#include "folb/families.hpp"
#include "folb/prelude.hpp"
#include "folb/recognizers.hpp"
#include "oracles.hpp"

using namespace folb;

namespace {

// Re-checks a false verdict: sentence conjuncts by binding the witness to the
// leading quantifiers, pattern conjuncts by checking the embedding.
void check_witness(const Verdict& v, const MetricOracle& m) {
  REQUIRE(v.is_false());
  CAPTURE(v.conjunct);
  for (const char* prefix : {"subgraph_", "isometric_"}) {
    const std::string p = prefix;
    if (v.conjunct.rfind(p, 0) != 0) continue;
    const auto patterns = forbidden_patterns(v.conjunct.substr(p.size()));
    REQUIRE(patterns.size() == 1);
    const Graph& h = patterns.front().second;
    const MetricOracle hm(h);
    REQUIRE(v.witness.size() == std::size_t(h.order()));
    for (Vertex a = 0; a < h.order(); ++a)
      for (Vertex b = 0; b < h.order(); ++b) {
        if (a != b) CHECK(v.witness[a] != v.witness[b]);
        if (p == "subgraph_")
          CHECK(h.adjacent(a, b) == m.graph().adjacent(v.witness[a], v.witness[b]));
        else
          CHECK(hm.dist(a, b) == m.dist(v.witness[a], v.witness[b]));
      }
    return;
  }
  const Formula f = sentence(Prelude::standard(), v.conjunct);
  REQUIRE(v.witness.size() == std::size_t(prefix_length(f)));
  CHECK_FALSE(evaluate_instance(f, m, v.witness));
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = class_registry();
  CHECK(reg.size() == 45);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].id < reg[i].id);
  for (const ClassSpec& c : reg) {
    CAPTURE(c.id);
    CHECK(Prelude::standard().find(c.sentence) != nullptr);
    CHECK_FALSE(c.steps.empty());
  }
  CHECK_THROWS_AS(class_spec("chordal"), BadParams);
  CHECK_THROWS_AS(class_spec("hypercellular"), BadParams);
}

TEST_CASE("recognizer examples") {
  CHECK(recognize("median", families::hypercube(3)).is_true());
  const Graph k23 = families::complete_bipartite(2, 3);
  const Verdict v = recognize("median", k23);
  REQUIRE(v.is_false());
  CHECK(v.conjunct == "subgraph_k23");
  check_witness(v, MetricOracle(k23));

  CHECK(recognize("bridged", families::cycle(4)).is_false());
  CHECK(recognize("netlike_partial_cube", families::cycle(6)).is_true());
  CHECK(recognize("pasch", families::w4_plus_vertex()).is_true());
  CHECK(recognize("peano", families::w4_plus_vertex()).is_false());
  CHECK(recognize("block_graph", families::random_tree(12, 5)).is_true());
  CHECK_THROWS_AS(recognize("median", Graph::from_edges(3, {{0, 1}})), DisconnectedGraph);
}

TEST_CASE("classify_all examples") {
  const auto k1 = classify_all(Graph(1));
  for (const char* id : {"tree", "median", "helly", "partial_cube", "bipartite", "block_graph", "modular"})
    CHECK(k1.at(id).is_true());

  const auto c5 = classify_all(families::cycle(5));
  CHECK(c5.at("weakly_modular").is_false());
  CHECK(c5.at("convex_balls").is_true());

  const auto q4 = classify_all(families::hypercube(4));
  for (const char* id : {"median", "partial_cube", "ample", "com", "modular"}) {
    CAPTURE(id);
    CHECK(q4.at(id).is_true());
  }
}

TEST_CASE("direct and sentence verdicts agree, witnesses re-evaluate") {
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : corpus::connected_graphs(n)) {
      const MetricOracle m(g);
      for (const ClassSpec& c : class_registry()) {
        CAPTURE(c.id);
        const Verdict direct = recognize(c, m);
        const Verdict logic = recognize_by_sentence(c, m);
        CHECK(direct.status == logic.status);
        if (direct.is_false()) check_witness(direct, m);
        if (logic.is_false()) {
          const Formula f = sentence(Prelude::standard(), c.sentence);
          CHECK(logic.witness.size() >= std::size_t(prefix_length(f)));
        }
      }
    }
}

TEST_CASE("tree recognizer matches the cycle oracle") {
  for (const Graph& g : corpus::connected_graphs_up_to(7)) CHECK(recognize("tree", g).is_true() == oracle::acyclic(g));
}

TEST_CASE("implication audit") {
  CHECK(implication_audit(corpus::connected_graphs_up_to(6)).empty());
  bool has_median_pc = false, has_wm_meshed = false, has_pt_dh = false;
  for (const Implication& i : implication_table()) {
    has_median_pc |= i.premise == "median" && i.conclusion == "partial_cube";
    has_wm_meshed |= i.premise == "weakly_modular" && i.conclusion == "meshed";
    has_pt_dh |= i.premise == "ptolemaic" && i.conclusion == "distance_hereditary";
  }
  CHECK(has_median_pc);
  CHECK(has_wm_meshed);
  CHECK(has_pt_dh);
}

TEST_CASE("missing data degrades to not available") {
  Prelude::standard();
  // A path passes every condition step and reaches the data lookup.
  const Graph g = families::path(4);
  const auto empty = std::filesystem::temp_directory_path() / "folb_empty_data";
  std::filesystem::create_directories(empty);
  setenv("FOLB_DATA_DIR", empty.c_str(), 1);
  const Verdict pm = recognize("pseudo_median", g);
  const Verdict wm = recognize("weakly_modular", g);
  unsetenv("FOLB_DATA_DIR");
  CHECK(pm.status == VerdictStatus::NotAvailable);
  CHECK_FALSE(pm.note.empty());
  CHECK(wm.is_true());
  CHECK(to_string(pm.status) == "na");
}

TEST_CASE("graph list files are validated") {
  const auto file = std::filesystem::temp_directory_path() / "folb_bad_list.txt";
  {
    std::ofstream out(file);
    out << "graph A 2 1\n0 1\nchecksum 1 2 2\n";
  }
  CHECK_THROWS_AS(load_graph_list(file), FormatError);
  {
    std::ofstream out(file);
    out << "graph A 2 1\n0 1\nchecksum 1 2 1\n";
  }
  const auto list = load_graph_list(file);
  REQUIRE(list.size() == 1);
  CHECK(list[0].label == "A");
  std::filesystem::remove(file);
  CHECK_THROWS_AS(load_graph_list(file), MissingData);
}
