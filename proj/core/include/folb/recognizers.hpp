#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "folb/conditions.hpp"
#include "folb/evaluator.hpp"
#include "folb/graph.hpp"
#include "folb/metric.hpp"

namespace folb {

enum class VerdictStatus { True, False, NotAvailable };

struct Verdict {
  VerdictStatus status = VerdictStatus::True;
  // For False: the prelude name of the violated conjunct, e.g. "tc" or
  // "subgraph_k23". The witness is then a counterexample tuple for that
  // sentence (its leading quantifiers) or a pattern embedding.
  std::string conjunct;
  std::vector<Vertex> witness;
  // Reason for NotAvailable.
  std::string note;

  bool is_true() const noexcept { return status == VerdictStatus::True; }
  bool is_false() const noexcept { return status == VerdictStatus::False; }
};

std::string to_string(VerdictStatus s);  // "true", "false", "na"

// One conjunct of a direct decision procedure.
struct CheckStep {
  enum class Kind { Condition, ForbiddenInduced, ForbiddenIsometric };
  Kind kind = Kind::Condition;
  // Condition: the prelude sentence the check mirrors. Forbidden steps: a
  // built-in pattern (c4, c5, k4_minus, k23, k33_minus, w4, w4_minus,
  // three_fan), a bundled list (pseudo_median_H, beineke_F_primed,
  // half_hyperbolic_H) or one labelled list entry such as Hc.
  std::string name;
  std::function<Check(const MetricOracle&)> check;  // Condition only
};

struct ClassSpec {
  std::string id;
  std::string sentence;  // prelude sentence name
  std::string summary;
  std::vector<CheckStep> steps;  // conjunction, checked in order
  std::vector<std::string> data_lists;
};

// Sorted by id.
const std::vector<ClassSpec>& class_registry();
// Throws BadParams for an unknown id.
const ClassSpec& class_spec(const std::string& id);

// Direct decision. Throws DisconnectedGraph.
Verdict recognize(const std::string& class_id, const Graph& g);
Verdict recognize(const ClassSpec& spec, const MetricOracle& m);
// Decision by evaluating the class's prelude sentence.
Verdict recognize_by_sentence(const ClassSpec& spec, const MetricOracle& m, const EvalOptions& options = {});

std::map<std::string, Verdict> classify_all(const Graph& g);

// Graphs for the built-in pattern names above; nullopt for list names.
std::optional<Graph> builtin_pattern(const std::string& name);
// Labelled patterns a forbidden step stands for. Throws MissingData.
std::vector<std::pair<std::string, Graph>> forbidden_patterns(const std::string& name);

struct Implication {
  std::string premise;
  std::string conclusion;
};
const std::vector<Implication>& implication_table();

struct ImplicationViolation {
  std::size_t graph_index = 0;
  Implication implication;
};
// Pairs that are NotAvailable on either side are skipped.
std::vector<ImplicationViolation> implication_audit(const std::vector<Graph>& corpus);

}  // namespace folb
