#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "folb/axioms.hpp"
#include "folb/formula.hpp"
#include "folb/graph.hpp"

namespace folb {

// A finite structure with one ternary relation.
using RelStructure = TernaryRelation;

RelStructure betweenness_structure(const Graph& g);

enum class Player { Spoiler, Duplicator };
std::string to_string(Player p);

struct SpoilerMove {
  bool in_first = true;  // picks in the first structure
  int element = 0;
};

struct GameOutcome {
  Player winner = Player::Duplicator;
  int rounds = 0;
  std::optional<SpoilerMove> spoiler_strategy;  // first move of a winning line
  std::uint64_t positions = 0;                  // positions explored
};

struct GameOptions {
  std::uint64_t node_budget = 100'000'000;
};

// Exact minimax for the r-round game. Throws ResourceBudgetExceeded when more
// than node_budget positions would be explored.
GameOutcome play(const RelStructure& a, const RelStructure& b, int rounds, const GameOptions& options = {});

// Least r <= r_max for which Spoiler wins.
std::optional<int> distinguishing_rank(const RelStructure& a, const RelStructure& b, int r_max,
                                       const GameOptions& options = {});

struct NamedSentence {
  std::string name;
  Formula formula;
};

// If Duplicator wins the r-round game on the betweenness structures of a and
// b, every sentence of quantifier rank <= r must have the same value on both.
// Returns the names of sentences that do not. Sentences of higher rank are
// skipped.
std::vector<std::string> agreement_check(const Graph& a, const Graph& b, int rounds,
                                         const std::vector<NamedSentence>& sentences,
                                         const GameOptions& options = {});

}  // namespace folb
