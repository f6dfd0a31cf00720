#include "folb/evaluator.hpp"

#include "folb/errors.hpp"

namespace folb {

namespace {

class Evaluator {
 public:
  Evaluator(const MetricOracle& m, int slots, std::uint64_t budget)
      : m_(m), n_(m.order()), env_(static_cast<std::size_t>(slots), -1), budget_(budget) {}

  std::vector<int>& env() { return env_; }
  std::uint64_t steps() const { return steps_; }

  bool eval(const Node& node) {
    if (++steps_ > budget_ && budget_ != 0)
      throw ResourceBudgetExceeded("evaluation exceeded " + std::to_string(budget_) + " steps");
    switch (node.op) {
      case Op::Between:
        return m_.between(env_[node.a], env_[node.b], env_[node.c]);
      case Op::Edge:
        return m_.edge(env_[node.a], env_[node.b]);
      case Op::Equal:
        return env_[node.a] == env_[node.b];
      case Op::Not:
        return !eval(*node.kids[0]);
      case Op::And:
        for (const auto& k : node.kids)
          if (!eval(*k)) return false;
        return true;
      case Op::Or:
        for (const auto& k : node.kids)
          if (eval(*k)) return true;
        return false;
      case Op::Implies:
        return !eval(*node.kids[0]) || eval(*node.kids[1]);
      case Op::Iff:
        return eval(*node.kids[0]) == eval(*node.kids[1]);
      case Op::Forall:
      case Op::Exists: {
        const bool stop = node.op == Op::Exists;
        int& slot = env_[node.a];
        const int saved = slot;
        for (int v = 0; v < n_; ++v) {
          slot = v;
          if (eval(*node.kids[0]) == stop) {
            slot = saved;
            return stop;
          }
        }
        slot = saved;
        return !stop;
      }
    }
    return false;
  }

  // Walks down from a node whose value is `target`, choosing the least
  // deciding vertex at every quantifier that has a single witness.
  void explain(const Formula& f, const Node& node, bool target, Witness& w) {
    if (!node.label.empty() && (w.trail.empty() || w.trail.back() != node.label)) w.trail.push_back(node.label);
    switch (node.op) {
      case Op::Not:
        explain(f, *node.kids[0], !target, w);
        return;
      case Op::And:
      case Op::Or: {
        // A false conjunction (true disjunction) is decided by one kid.
        const bool single = (node.op == Op::And) != target;
        if (!single) {
          // Every kid agrees with the target; collect all their choices.
          for (const auto& k : node.kids) explain(f, *k, target, w);
          return;
        }
        for (const auto& k : node.kids)
          if (eval(*k) == target) {
            explain(f, *k, target, w);
            return;
          }
        return;
      }
      case Op::Implies:
        if (!target) {
          explain(f, *node.kids[0], true, w);
          explain(f, *node.kids[1], false, w);
        }
        return;
      case Op::Forall:
      case Op::Exists: {
        const bool single = (node.op == Op::Exists) == target;
        if (!single) return;
        for (int v = 0; v < n_; ++v) {
          env_[node.a] = v;
          if (eval(*node.kids[0]) == target) {
            w.assignment.emplace_back(f.slot_name(node.a), v);
            explain(f, *node.kids[0], target, w);
            return;
          }
        }
        return;
      }
      default:
        return;
    }
  }

 private:
  const MetricOracle& m_;
  int n_;
  std::vector<int> env_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
};

}  // namespace

EvalResult evaluate(const Formula& f, const MetricOracle& m, const Assignment& env, const EvalOptions& options) {
  Evaluator ev(m, f.slot_count(), options.step_budget);
  for (int s = 0; s < f.free_count(); ++s) {
    auto it = env.find(f.slot_name(s));
    if (it == env.end()) throw UnboundVariable("free variable '" + f.slot_name(s) + "' has no value", 0);
    if (it->second < 0 || it->second >= m.order())
      throw BadParams("value of '" + f.slot_name(s) + "' is not a vertex");
    ev.env()[s] = it->second;
  }
  EvalResult r;
  r.value = ev.eval(f.root());
  if (options.explain) ev.explain(f, f.root(), r.value, r.witness);
  r.steps = ev.steps();
  return r;
}

int prefix_length(const Formula& f) {
  const Node* n = &f.root();
  if (n->op != Op::Forall && n->op != Op::Exists) return 0;
  const Op q = n->op;
  int k = 0;
  while (n->op == q) {
    ++k;
    n = n->kids[0].get();
  }
  return k;
}

bool evaluate_instance(const Formula& f, const MetricOracle& m, const std::vector<Vertex>& values) {
  Evaluator ev(m, f.slot_count(), 0);
  const Node* n = &f.root();
  for (Vertex v : values) {
    if (n->op != Op::Forall && n->op != Op::Exists)
      throw BadParams("more values than leading quantifiers in '" + f.source() + "'");
    if (v < 0 || v >= m.order()) throw BadParams("instance value is not a vertex");
    ev.env()[n->a] = v;
    n = n->kids[0].get();
  }
  return ev.eval(*n);
}

}  // namespace folb
