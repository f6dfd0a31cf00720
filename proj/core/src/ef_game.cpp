#include "folb/ef_game.hpp"

#include <algorithm>
#include <unordered_map>

#include "folb/errors.hpp"
#include "folb/evaluator.hpp"
#include "folb/metric.hpp"

namespace folb {

RelStructure betweenness_structure(const Graph& g) { return TernaryRelation::from_metric(MetricOracle(g)); }

std::string to_string(Player p) { return p == Player::Spoiler ? "Spoiler" : "Duplicator"; }

namespace {

struct PositionHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1)) * 1099511628211ull;
    return h;
  }
};

class Solver {
 public:
  Solver(const RelStructure& a, const RelStructure& b, std::uint64_t budget) : a_(a), b_(b), budget_(budget) {}

  // Spoiler wins from the current picks with `rounds` moves left.
  bool spoiler_wins(int rounds, SpoilerMove* first = nullptr) {
    if (rounds == 0) return false;
    std::vector<int> key = canonical_key(rounds);
    if (!first) {
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    bool wins = false;
    for (int side = 0; side < 2 && !wins; ++side) {
      const RelStructure& from = side == 0 ? a_ : b_;
      const RelStructure& to = side == 0 ? b_ : a_;
      std::vector<int>& picked_from = side == 0 ? picks_a_ : picks_b_;
      std::vector<int>& picked_to = side == 0 ? picks_b_ : picks_a_;
      for (int e = 0; e < from.universe() && !wins; ++e) {
        // Repeating a pick is answered by repeating its partner and gains nothing.
        if (std::find(picked_from.begin(), picked_from.end(), e) != picked_from.end()) continue;
        bool every_answer_loses = true;
        for (int f = 0; f < to.universe() && every_answer_loses; ++f) {
          if (std::find(picked_to.begin(), picked_to.end(), f) != picked_to.end()) continue;
          tick();
          picked_from.push_back(e);
          picked_to.push_back(f);
          const bool survives = extends_isomorphically() && !spoiler_wins(rounds - 1);
          picked_from.pop_back();
          picked_to.pop_back();
          if (survives) every_answer_loses = false;
        }
        if (every_answer_loses) {
          wins = true;
          if (first) *first = SpoilerMove{side == 0, e};
        }
      }
    }
    memo_.emplace(std::move(key), wins);
    return wins;
  }

  std::uint64_t positions() const noexcept { return positions_; }

 private:
  void tick() {
    if (++positions_ > budget_)
      throw ResourceBudgetExceeded("EF game exceeds the budget of " + std::to_string(budget_) + " positions");
  }

  // The newest pair keeps the pick map a partial isomorphism.
  bool extends_isomorphically() const {
    const std::size_t k = picks_a_.size() - 1;
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= k; ++j) {
        const std::size_t triples[3][3] = {{k, i, j}, {i, k, j}, {i, j, k}};
        for (const auto& t : triples)
          if (a_.contains(picks_a_[t[0]], picks_a_[t[1]], picks_a_[t[2]]) !=
              b_.contains(picks_b_[t[0]], picks_b_[t[1]], picks_b_[t[2]]))
            return false;
      }
    return true;
  }

  // The order of earlier picks does not matter.
  std::vector<int> canonical_key(int rounds) const {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < picks_a_.size(); ++i) pairs.emplace_back(picks_a_[i], picks_b_[i]);
    std::sort(pairs.begin(), pairs.end());
    std::vector<int> key{rounds};
    for (auto [x, y] : pairs) {
      key.push_back(x);
      key.push_back(y);
    }
    return key;
  }

  const RelStructure& a_;
  const RelStructure& b_;
  std::uint64_t budget_;
  std::uint64_t positions_ = 0;
  std::vector<int> picks_a_;
  std::vector<int> picks_b_;
  std::unordered_map<std::vector<int>, bool, PositionHash> memo_;
};

}  // namespace

GameOutcome play(const RelStructure& a, const RelStructure& b, int rounds, const GameOptions& options) {
  if (rounds < 0) throw BadParams("number of rounds must be non-negative");
  Solver solver(a, b, options.node_budget);
  SpoilerMove first;
  GameOutcome out;
  out.rounds = rounds;
  if (solver.spoiler_wins(rounds, &first)) {
    out.winner = Player::Spoiler;
    out.spoiler_strategy = first;
  }
  out.positions = solver.positions();
  return out;
}

std::optional<int> distinguishing_rank(const RelStructure& a, const RelStructure& b, int r_max,
                                       const GameOptions& options) {
  for (int r = 0; r <= r_max; ++r)
    if (play(a, b, r, options).winner == Player::Spoiler) return r;
  return std::nullopt;
}

std::vector<std::string> agreement_check(const Graph& a, const Graph& b, int rounds,
                                         const std::vector<NamedSentence>& sentences, const GameOptions& options) {
  std::vector<std::string> violations;
  if (play(betweenness_structure(a), betweenness_structure(b), rounds, options).winner != Player::Duplicator)
    return violations;
  const MetricOracle ma(a);
  const MetricOracle mb(b);
  const EvalOptions quiet{0, false};
  for (const auto& s : sentences) {
    if (analyze(s.formula).quantifier_rank > rounds) continue;
    if (evaluate(s.formula, ma, {}, quiet).value != evaluate(s.formula, mb, {}, quiet).value)
      violations.push_back(s.name);
  }
  return violations;
}

}  // namespace folb
