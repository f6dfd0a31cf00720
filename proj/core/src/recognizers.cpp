#include "folb/recognizers.hpp"

#include <algorithm>
#include <mutex>

#include "folb/convexity.hpp"
#include "folb/errors.hpp"
#include "folb/families.hpp"
#include "folb/halfspaces.hpp"
#include "folb/helly.hpp"
#include "folb/interval_shapes.hpp"
#include "folb/matroid.hpp"
#include "folb/prelude.hpp"
#include "folb/structural.hpp"
#include "folb/subgraph.hpp"

namespace folb {

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::True:
      return "true";
    case VerdictStatus::False:
      return "false";
    case VerdictStatus::NotAvailable:
      return "na";
  }
  return "na";
}

namespace {

using Kind = CheckStep::Kind;

CheckStep cond(std::string name, std::function<Check(const MetricOracle&)> fn) {
  return {Kind::Condition, std::move(name), std::move(fn)};
}
CheckStep induced(std::string name) { return {Kind::ForbiddenInduced, std::move(name), {}}; }
CheckStep isometric(std::string name) { return {Kind::ForbiddenIsometric, std::move(name), {}}; }

std::vector<CheckStep> operator+(std::vector<CheckStep> a, const std::vector<CheckStep>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

std::vector<ClassSpec> build_registry() {
  const std::vector<CheckStep> weakly_modular{cond("tc", tc), cond("qc", qc)};
  const std::vector<CheckStep> partial_cube{cond("bipartite", bipartite), cond("w_sets_convex", w_sets_convex)};
  const std::vector<CheckStep> convex_balls{cond("tpc", tpc), cond("inc", inc)};
  const std::vector<CheckStep> com = partial_cube + std::vector<CheckStep>{
                                                        cond("antipodal_intervals_gated", antipodal_intervals_gated)};
  const std::vector<CheckStep> dh{cond("dh_inclusions", dh_inclusions), induced("three_fan")};
  const std::vector<CheckStep> bipartite_step{cond("bipartite", bipartite)};

  std::vector<ClassSpec> r = {
      {"almost_median", "almost_median", "partial cube with the almost quadrangle condition",
       partial_cube + std::vector<CheckStep>{cond("aqc", aqc)}, {}},
      {"alpha_one", "alpha_one", "graphs with an alpha-1 metric", convex_balls + std::vector{isometric("Hc")},
       {"half_hyperbolic_H"}},
      {"ample", "ample", "COM whose antipodal intervals are cubes",
       com + std::vector{cond("antipodal_intervals_cubes", antipodal_intervals_cubes)}, {}},
      {"antipodal", "antipodal", "every vertex has an antipode", {cond("antipodal", is_antipodal_graph)}, {}},
      {"bipartite", "bipartite", "no odd cycles", bipartite_step, {}},
      {"bipartite_pasch", "bipartite_pasch", "Pasch partial cubes", std::vector{cond("pasch", pasch)} + partial_cube,
       {}},
      {"bipartite_peano", "bipartite_peano", "Peano partial cubes", std::vector{cond("peano", peano)} + partial_cube,
       {}},
      {"block_graph", "block_graph", "every block is complete",
       dh + std::vector{induced("c4"), induced("k4_minus")}, {}},
      {"bridged", "bridged", "weakly modular without induced C4 and C5",
       weakly_modular + std::vector{induced("c4"), induced("c5")}, {}},
      {"bucolic", "bucolic", "weakly modular without induced K2,3, W4 and W4-",
       weakly_modular + std::vector{induced("k23"), induced("w4"), induced("w4_minus")}, {}},
      {"cellular", "cellular", "bipartite with convex triangle hulls",
       bipartite_step + std::vector{cond("triangle_hulls_convex", triangle_hulls_convex)}, {}},
      {"clique_helly", "clique_helly", "maximal cliques have the Helly property",
       {cond("clique_helly", clique_helly)}, {}},
      {"com", "com", "complexes of oriented matroids", com, {}},
      {"convex_balls", "convex_balls", "all balls are convex", convex_balls, {}},
      {"convex_intervals", "convex_intervals", "all intervals are convex",
       {cond("convex_intervals", convex_intervals)}, {}},
      {"delta_matroid_basis", "delta_matroid_basis", "basis graphs of even delta-matroids",
       {cond("two_interval_condition_4", two_interval_condition_4),
        cond("positioning_condition", positioning_condition), induced("beineke_F_primed")},
       {"beineke_F_primed"}},
      {"distance_hereditary", "distance_hereditary", "induced paths are shortest paths", dh, {}},
      {"dual_polar", "dual_polar", "thick weakly modular without isometric K4- and K3,3-",
       weakly_modular + std::vector{cond("thick", thick), isometric("k4_minus"), isometric("k33_minus")}, {}},
      {"half_hyperbolic", "half_hyperbolic", "hyperbolicity at most 1/2",
       convex_balls + std::vector{isometric("half_hyperbolic_H")}, {"half_hyperbolic_H"}},
      {"helly", "helly", "balls have the Helly property",
       std::vector{cond("clique_helly", clique_helly)} + weakly_modular + std::vector{cond("c4w4", c4w4)}, {}},
      {"jhc", "jhc", "join-hull commutative", {cond("peano", peano)}, {}},
      {"matroid_basis", "matroid_basis", "basis graphs of matroids",
       {cond("two_interval_condition_3", two_interval_condition_3),
        cond("positioning_condition", positioning_condition)},
       {}},
      {"median", "median", "modular without induced K2,3",
       bipartite_step + weakly_modular + std::vector{induced("k23")}, {}},
      {"meshed", "meshed", "metric triangles of side two close up", {cond("meshed", meshed_triangles)}, {}},
      {"modular", "modular", "bipartite weakly modular", bipartite_step + weakly_modular, {}},
      {"netlike_partial_cube", "netlike_partial_cube", "partial cube with ph-stable degree-3-convex boundaries",
       partial_cube + std::vector{cond("boundaries_netlike", boundaries_netlike)}, {}},
      {"oriented_matroid", "oriented_matroid", "tope graphs of oriented matroids",
       com + std::vector{cond("antipodal", is_antipodal_graph)}, {}},
      {"partial_cube", "partial_cube", "isometric subgraphs of hypercubes", partial_cube, {}},
      {"partial_hamming", "partial_hamming", "halfspaces and their complements are convex",
       {cond("partial_hamming", partial_hamming)}, {}},
      {"pasch", "pasch", "Pasch axiom", {cond("pasch", pasch)}, {}},
      {"pasch_peano", "pasch_peano", "Pasch and Peano axioms", {cond("pasch", pasch), cond("peano", peano)}, {}},
      {"peano", "peano", "Peano axiom", {cond("peano", peano)}, {}},
      {"pseudo_median", "pseudo_median", "pseudo-modular without the H1..H4 obstructions",
       {cond("pseudo_modular", pseudo_modular_triangles), induced("pseudo_median_H")}, {"pseudo_median_H"}},
      {"pseudo_modular", "pseudo_modular", "metric triangles have size at most one",
       {cond("pseudo_modular", pseudo_modular_triangles)}, {}},
      {"ptolemaic", "ptolemaic", "chordal distance hereditary", dh + std::vector{induced("c4")},
       {}},
      {"quasi_median", "quasi_median", "quasi-modular without induced K2,3",
       weakly_modular + std::vector{induced("k4_minus"), induced("k23")}, {}},
      {"quasi_modular", "quasi_modular", "weakly modular without induced K4-",
       weakly_modular + std::vector{induced("k4_minus")}, {}},
      {"sand_glass", "sand_glass", "sand-glass axiom", {cond("sand_glass", sand_glass)}, {}},
      {"strongly_modular", "strongly_modular", "modular without isometric K4- and K3,3-",
       bipartite_step + weakly_modular + std::vector{isometric("k4_minus"), isometric("k33_minus")}, {}},
      {"sweakly_modular", "sweakly_modular", "weakly modular without isometric K4- and K3,3-",
       weakly_modular + std::vector{isometric("k4_minus"), isometric("k33_minus")}, {}},
      {"thick", "thick", "every 2-interval contains a square", {cond("thick", thick)}, {}},
      {"tree", "tree", "connected and acyclic",
       bipartite_step + std::vector{cond("geodesic_parent_unique", geodesic_parent_unique)}, {}},
      {"weakly_bridged", "weakly_bridged", "weakly modular without induced C4",
       weakly_modular + std::vector{induced("c4")}, {}},
      {"weakly_median", "weakly_median", "weakly modular without the H1..H4 obstructions",
       weakly_modular + std::vector{induced("pseudo_median_H")}, {"pseudo_median_H"}},
      {"weakly_modular", "weakly_modular", "triangle and quadrangle conditions", weakly_modular, {}},
  };
  std::sort(r.begin(), r.end(), [](const ClassSpec& a, const ClassSpec& b) { return a.id < b.id; });
  return r;
}

// Sentences are expanded once per process.
const Formula& cached_sentence(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::string, Formula> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, sentence(Prelude::standard(), name)).first;
  return it->second;
}

Verdict not_available(const std::string& note) { return {VerdictStatus::NotAvailable, {}, {}, note}; }

}  // namespace

const std::vector<ClassSpec>& class_registry() {
  static const std::vector<ClassSpec> registry = build_registry();
  return registry;
}

const ClassSpec& class_spec(const std::string& id) {
  for (const auto& spec : class_registry())
    if (spec.id == id) return spec;
  throw BadParams("unknown class '" + id + "'");
}

std::optional<Graph> builtin_pattern(const std::string& name) {
  using namespace families;
  if (name == "c4") return cycle(4);
  if (name == "c5") return cycle(5);
  if (name == "k4_minus") return k4_minus();
  if (name == "k23") return complete_bipartite(2, 3);
  if (name == "k33_minus") return k33_minus();
  if (name == "w4") return wheel(4);
  if (name == "w4_minus") return almost_wheel(4);
  if (name == "three_fan") return three_fan();
  return std::nullopt;
}

std::vector<std::pair<std::string, Graph>> forbidden_patterns(const std::string& name) {
  if (auto g = builtin_pattern(name)) return {{name, *g}};
  std::vector<std::pair<std::string, Graph>> out;
  const auto suffix = [](const std::string& label) {
    std::string s = label;
    std::replace(s.begin(), s.end(), '\'', 'p');
    return s;
  };
  const auto lists = forbidden_list_names();
  if (std::find(lists.begin(), lists.end(), name) != lists.end()) {
    for (const Graph& g : forbidden_list(name)) out.emplace_back(suffix(g.name()), g);
    return out;
  }
  // A single labelled entry: look through every list, and if it is not found
  // report an absent list before calling the label unknown.
  std::optional<MissingData> missing;
  for (const std::string& list : lists) {
    try {
      for (const Graph& g : forbidden_list(list))
        if (suffix(g.name()) == name) return {{name, g}};
    } catch (const MissingData& e) {
      if (!missing) missing = e;
    }
  }
  if (missing) throw *missing;
  throw BadParams("unknown forbidden pattern '" + name + "'");
}

Verdict recognize(const ClassSpec& spec, const MetricOracle& m) {
  for (const CheckStep& step : spec.steps) {
    if (step.kind == Kind::Condition) {
      Check c = step.check(m);
      if (!c.holds) return {VerdictStatus::False, c.condition, std::move(c.witness), {}};
      continue;
    }
    std::vector<std::pair<std::string, Graph>> patterns;
    try {
      patterns = forbidden_patterns(step.name);
    } catch (const MissingData& e) {
      return not_available(e.what());
    }
    const bool by_induced = step.kind == Kind::ForbiddenInduced;
    for (const auto& [label, pattern] : patterns) {
      if (pattern.order() > m.order()) continue;
      auto e = by_induced ? find_induced(m.graph(), pattern) : find_isometric(m, pattern);
      if (e) return {VerdictStatus::False, (by_induced ? "subgraph_" : "isometric_") + label, *e, {}};
    }
  }
  return {};
}

Verdict recognize(const std::string& class_id, const Graph& g) {
  const ClassSpec& spec = class_spec(class_id);
  return recognize(spec, MetricOracle(g));
}

Verdict recognize_by_sentence(const ClassSpec& spec, const MetricOracle& m, const EvalOptions& options) {
  const Formula* f = nullptr;
  try {
    f = &cached_sentence(spec.sentence);
  } catch (const MissingData& e) {
    return not_available(e.what());
  }
  EvalResult r = evaluate(*f, m, {}, options);
  if (r.value) return {};
  Verdict v{VerdictStatus::False, spec.sentence, {}, {}};
  const auto names = Prelude::standard().sentence_names();
  for (const std::string& label : r.witness.trail)
    if (std::find(names.begin(), names.end(), label) != names.end()) v.conjunct = label;
  for (const auto& [name, value] : r.witness.assignment) v.witness.push_back(value);
  return v;
}

std::map<std::string, Verdict> classify_all(const Graph& g) {
  const MetricOracle m(g);
  std::map<std::string, Verdict> out;
  for (const auto& spec : class_registry()) out.emplace(spec.id, recognize(spec, m));
  return out;
}

const std::vector<Implication>& implication_table() {
  static const std::vector<Implication> table = {
      {"median", "modular"},
      {"modular", "weakly_modular"},
      {"weakly_modular", "meshed"},
      {"median", "partial_cube"},
      {"ample", "com"},
      {"oriented_matroid", "com"},
      {"bridged", "weakly_bridged"},
      {"weakly_bridged", "convex_balls"},
      {"ptolemaic", "distance_hereditary"},
      {"bipartite_pasch", "partial_cube"},
  };
  return table;
}

std::vector<ImplicationViolation> implication_audit(const std::vector<Graph>& corpus) {
  std::vector<ImplicationViolation> out;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const MetricOracle m(corpus[i]);
    std::map<std::string, Verdict> seen;
    const auto verdict = [&](const std::string& id) -> const Verdict& {
      auto it = seen.find(id);
      if (it == seen.end()) it = seen.emplace(id, recognize(class_spec(id), m)).first;
      return it->second;
    };
    for (const Implication& imp : implication_table()) {
      const Verdict& premise = verdict(imp.premise);
      if (!premise.is_true()) continue;
      const Verdict& conclusion = verdict(imp.conclusion);
      if (conclusion.is_false()) out.push_back({i, imp});
    }
  }
  return out;
}

}  // namespace folb
