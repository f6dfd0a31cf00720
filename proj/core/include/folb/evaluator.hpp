#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "folb/formula.hpp"
#include "folb/metric.hpp"

namespace folb {

struct EvalOptions {
  // Node visits allowed before ResourceBudgetExceeded; 0 means unlimited.
  std::uint64_t step_budget = 0;
  bool explain = true;
};

struct Witness {
  // Quantifier choices that decide the verdict, outermost first.
  std::vector<std::pair<std::string, Vertex>> assignment;
  // Macro names met while descending to the deciding atom.
  std::vector<std::string> trail;
  bool empty() const noexcept { return assignment.empty() && trail.empty(); }
};

struct EvalResult {
  bool value = false;
  Witness witness;
  std::uint64_t steps = 0;
};

using Assignment = std::map<std::string, Vertex>;

// Every free variable of f must be bound by env (UnboundVariable otherwise).
EvalResult evaluate(const Formula& f, const MetricOracle& m, const Assignment& env = {},
                    const EvalOptions& options = {});

// Binds the leading run of quantifiers of a closed formula to `values` (in
// order) and evaluates what remains. Used to re-check reported
// counterexamples.
bool evaluate_instance(const Formula& f, const MetricOracle& m, const std::vector<Vertex>& values);

// Number of leading quantifiers that share the outermost polarity.
int prefix_length(const Formula& f);

}  // namespace folb
