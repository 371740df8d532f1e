#include "doctest.h"
#include "support.hpp"

#include "proxygames/dynamics.hpp"
#include "proxygames/constructions.hpp"

using namespace proxygames;
using testing::at;
using testing::R;

namespace {

ProfileIndex idx(const Game& g, std::vector<int> p) { return g.space().index(p); }

}  // namespace

TEST_CASE("intro game payoff table") {
  const Rational d = R("1/10");
  Game g = intro_game(d);
  // (player 1, player 2, player 3) -> (U1, U2 = U3)
  struct Cell {
    std::vector<int> p;
    Rational u1, u23;
  };
  std::vector<Cell> table = {
      {{0, 0, 0}, 1 - d, 1}, {{0, 1, 0}, 0, 0},         {{1, 0, 0}, d, 0},         {{1, 1, 0}, 1, 0},
      {{0, 0, 1}, 0, 2 * d}, {{0, 1, 1}, 2 * d, 0},     {{1, 0, 1}, 3 * d, d},     {{1, 1, 1}, d, 2 * d},
  };
  for (const auto& c : table) {
    CHECK(at(g.utility(0), idx(g, c.p)) == c.u1);
    CHECK(at(g.utility(1), idx(g, c.p)) == c.u23);
    CHECK(at(g.utility(2), idx(g, c.p)) == c.u23);
    CHECK(at(g.welfare(), idx(g, c.p)) == (c.u1 + 2 * c.u23) / (3 - d));
  }
  CHECK(g.normalized());
  CHECK(pure_nash_equilibria(g) == ProfileSet{idx(g, {0, 0, 0})});
  CHECK_THROWS_AS(intro_game(0), std::invalid_argument);
  CHECK_THROWS_AS(intro_game(3), std::invalid_argument);
}

TEST_CASE("staggered potential game") {
  CHECK(staggered_levels(R("1/10")) == 2);
  CHECK(staggered_levels(R("1/20")) == 12);
  CHECK(staggered_levels(R("1/8")) == 0);
  CHECK_THROWS_AS(staggered_levels(R("1/7")), std::invalid_argument);
  for (const char* text : {"1/10", "1/20", "0.13"}) {
    Rational eps = R(text);
    Game g = staggered_potential_game(eps);
    int m = staggered_levels(eps);
    CHECK(g.action_counts() == std::vector<int>{m + 2, 3, m + 1});
    CHECK(verify_potential(g).holds);
    CHECK(g.normalized());
    CHECK(inconsequentiality(g, 0, 1) == 6 * eps);
    CHECK(pure_nash_equilibria(g) == ProfileSet{0});
    CHECK(at(g.welfare(), idx(g, {m + 1, 0, m})) == 1 - 2 * eps - m * eps);
  }
  CHECK(staggered_potential_game(R("1/20")).size() == 546);
}

TEST_CASE("block identical-interest game") {
  CHECK(block_count(R("1/4")) == 1);
  CHECK(block_count(R("1/10")) == 7);
  CHECK_THROWS_AS(block_count(R("1/3")), std::invalid_argument);
  for (const char* text : {"1/4", "3/10", "1/10", "1/100"}) {
    BlockGame b = block_identical_interest_game(R(text));
    CHECK(is_identical_interest(b.game));
    CHECK(b.game.normalized());
    CHECK(inconsequentiality(b.game, 0, 1) == 2 * b.eps);
    auto checks = validate_block_game(b);
    CHECK(checks.size() == 7);
    for (const auto& c : checks) CHECK_MESSAGE(c.holds, c.property << ": " << c.detail);
    CHECK(b.dagger.size() == static_cast<std::size_t>(b.m) + 1);
  }
  BlockGame b = block_identical_interest_game(R("1/4"));
  CHECK(stochastically_stable_exact(b.game) == ProfileSet{idx(b.game, {0, 0, 0}), idx(b.game, {1, 1, 0})});
}

TEST_CASE("random generators") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> shape = testing::random_shape(rng, 3, 3);
    for (int& s : shape) s = std::max(s, 1);
    Rational eps = Rational(static_cast<long>(rng() % 5), 10);
    Game pg = random_potential_game({shape, eps, rng()});
    CHECK(verify_potential(pg).holds);
    CHECK(pg.welfare().maxCoeff() == 1);
    CHECK(pg.welfare().minCoeff() >= 0);
    CHECK(inconsequentiality(pg, 0, 1) <= eps);
    Game ii = random_identical_interest_game({shape, eps, rng()});
    CHECK(is_identical_interest(ii));
    for (int o : {0, 2}) CHECK(inconsequentiality(ii, o, 1) <= eps);
  }
  Game a = random_potential_game({{3, 2, 2}, R("1/5"), 17});
  Game b = random_potential_game({{3, 2, 2}, R("1/5"), 17});
  CHECK(a.welfare() == b.welfare());
  CHECK(a.utility(0) == b.utility(0));
  Game zero = random_potential_game({{3, 3, 2}, 0, 5});
  CHECK(inconsequentiality(zero, 0, 1) == 0);
  CHECK_THROWS_AS(random_potential_game({{3, 3}, 0, 5}), std::invalid_argument);
}

TEST_CASE("three-player shapes") {
  CHECK(three_player_shape(12) == std::vector<int>{3, 2, 2});
  CHECK(three_player_shape(27) == std::vector<int>{3, 3, 3});
  CHECK(three_player_shape(8) == std::vector<int>{2, 2, 2});
  CHECK_THROWS_AS(three_player_shape(7), std::invalid_argument);
}
