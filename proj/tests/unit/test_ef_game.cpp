#include <doctest.h>

#include "folb/corpus.hpp"
#include "folb/ef_game.hpp"
#include "folb/errors.hpp"
#include "folb/families.hpp"
#include "folb/prelude.hpp"

using namespace folb;

namespace {

RelStructure bs(const Graph& g) { return betweenness_structure(g); }

}  // namespace

TEST_CASE("K2 versus P3") {
  const auto k2 = bs(families::path(2)), p3 = bs(families::path(3));
  CHECK(play(k2, p3, 1).winner == Player::Duplicator);
  CHECK(play(k2, p3, 2).winner == Player::Duplicator);
  const GameOutcome r3 = play(k2, p3, 3);
  CHECK(r3.winner == Player::Spoiler);
  CHECK(r3.spoiler_strategy.has_value());
  CHECK(distinguishing_rank(k2, p3, 5) == 3);
  CHECK(to_string(Player::Spoiler) == "Spoiler");
}

TEST_CASE("small Eulerian pair") {
  const auto a = bs(families::euler_a(1)), b = bs(families::euler_b(1));
  CHECK(play(a, b, 1).winner == Player::Duplicator);
  CHECK(play(a, b, 2).winner == Player::Duplicator);
}

TEST_CASE("reflexivity, symmetry and monotonicity") {
  const auto graphs = corpus::connected_graphs(4);
  for (const Graph& g : graphs) {
    CHECK(play(bs(g), bs(g), 3).winner == Player::Duplicator);
    CHECK_FALSE(distinguishing_rank(bs(g), bs(g), 3));
  }
  for (std::size_t i = 0; i < graphs.size(); ++i)
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      const auto a = bs(graphs[i]), b = bs(graphs[j]);
      bool spoiler = false;
      for (int r = 1; r <= 3; ++r) {
        const Player w = play(a, b, r).winner;
        CHECK(w == play(b, a, r).winner);
        if (spoiler) CHECK(w == Player::Spoiler);
        spoiler = w == Player::Spoiler;
      }
    }
}

TEST_CASE("budget") {
  const auto a = bs(families::cycle(8)), b = bs(families::cycle(9));
  CHECK_THROWS_AS(play(a, b, 4, GameOptions{50}), ResourceBudgetExceeded);
}

TEST_CASE("agreement with sentences") {
  std::vector<NamedSentence> battery;
  const Prelude& p = Prelude::standard();
  for (const std::string& name : p.sentence_names()) {
    try {
      battery.push_back({name, sentence(p, name)});
    } catch (const MissingData&) {
    }
  }
  battery.push_back({"three_distinct", parse("exists x exists y exists z x != y & y != z & x != z", p)});
  battery.push_back({"two_distinct", parse("exists x exists y x != y", p)});
  CHECK(agreement_check(families::path(2), families::path(3), 2, battery).empty());
  CHECK(agreement_check(families::cycle(5), families::cycle(5), 3, battery).empty());
  CHECK(agreement_check(families::euler_a(2), families::euler_b(2), 2, battery).empty());
}
