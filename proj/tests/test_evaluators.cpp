#include "doctest.h"
#include "support.hpp"

#include <algorithm>

#include "proxygames/evaluators.hpp"
#include "proxygames/constructions.hpp"

using namespace proxygames;
using testing::at;
using testing::R;

namespace {

std::vector<Rational> list(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(R(s));
  return out;
}

// Max over the hidden coordinate by explicit enumeration of profiles.
Payoffs max_loop(const Game& g, const Payoffs& t, int hidden) {
  Payoffs out(t.size());
  for (ProfileIndex a = 0; a < g.size(); ++a) {
    ActionProfile p = g.space().profile(a);
    Rational best = at(t, a);
    for (int b = 0; b < g.action_counts()[hidden]; ++b) {
      p[hidden] = b;
      best = std::max(best, at(t, g.space().index(p)));
    }
    out(static_cast<Eigen::Index>(a)) = best;
  }
  return out;
}

}  // namespace

TEST_CASE("built-in evaluators") {
  auto s = list({"1/2", "0", "1/4"});
  CHECK(Evaluator::sum()(s) == R("3/4"));
  CHECK(Evaluator::max()(s) == R("1/2"));
  CHECK(Evaluator::min()(s) == 0);
  CHECK(Evaluator::mean()(s) == R("1/4"));
  CHECK(Evaluator::by_name("mean").kind() == EvaluatorKind::Mean);
  CHECK_THROWS_AS(Evaluator::by_name("median"), std::invalid_argument);
  std::vector<Rational> empty;
  CHECK_THROWS_AS(Evaluator::max()(empty), std::invalid_argument);
  CHECK_FALSE(Evaluator::sum().bounded());
  CHECK(Evaluator::mean().bounded());
  CHECK(builtin_evaluators().size() == 4);
}

TEST_CASE("built-in evaluators satisfy both axioms") {
  for (const auto& f : builtin_evaluators()) {
    auto report = check_acceptability(f, 2000, 3);
    CHECK_MESSAGE(report.acceptable(), f.name());
    CHECK(report.trials == 2000);
  }
}

TEST_CASE("axiom violations are detected") {
  // Order-dependent: violates invariance under permutation.
  Evaluator first = Evaluator::custom("first", [](std::span<const Rational> v) { return v.front(); }, true);
  CHECK_FALSE(check_acceptability(first, 500, 1).axiom2_violations.empty());
  // Constant: violates strict monotonicity.
  Evaluator constant = Evaluator::custom("zero", [](std::span<const Rational>) { return Rational(0); }, false);
  auto report = check_acceptability(constant, 500, 1);
  CHECK_FALSE(report.axiom1_violations.empty());
  CHECK(report.axiom2_violations.empty());
}

TEST_CASE("boundedness witnesses") {
  auto sum_witnesses = check_boundedness(Evaluator::sum(), 500, 2);
  REQUIRE_FALSE(sum_witnesses.empty());
  bool has_pair = std::any_of(sum_witnesses.begin(), sum_witnesses.end(),
                              [](const auto& l) { return l == std::vector<Rational>{1, 1}; });
  CHECK(has_pair);
  for (const char* name : {"max", "min", "mean"}) CHECK(check_boundedness(Evaluator::by_name(name), 500, 2).empty());
}

TEST_CASE("table evaluator") {
  Evaluator::Table table{{list({"0", "1"}), R("1/2")}, {list({"1", "1"}), 1}};
  Evaluator f = Evaluator::from_table(table, true, "tab");
  auto reversed = list({"1", "0"});
  CHECK(f(reversed) == R("1/2"));
  auto missing = list({"0", "0"});
  CHECK_THROWS_AS(f(missing), std::out_of_range);
  CHECK(f.name() == "tab");
  CHECK(f.kind() == EvaluatorKind::Custom);
}

TEST_CASE("collapse_along agrees with a max loop and ignores the hidden action") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Game g = testing::random_game(testing::random_shape(rng), rng());
    for (int hidden = 0; hidden < g.players(); ++hidden) {
      CHECK(collapse_along(g.utility(0), g.space(), hidden, Evaluator::max()) == max_loop(g, g.utility(0), hidden));
      for (const auto& f : builtin_evaluators()) {
        Payoffs proxy = collapse_along(g.utility(0), g.space(), hidden, f);
        for (ProfileIndex a = 0; a < g.size(); ++a)
          REQUIRE(at(proxy, a) == at(proxy, g.space().fiber_base(a, hidden)));
      }
    }
  }
}

TEST_CASE("reduced games") {
  Game g = intro_game(R("1/10"));
  ReducedGame r = reduce_game(g, 0, 1, Evaluator::max());
  CHECK(r.game().welfare_handle() == g.welfare_handle());
  CHECK(r.game().utility(1) == g.utility(1));
  CHECK(r.game().utility(2) == g.utility(2));
  CHECK(r.observers() == std::vector<int>{0});
  CHECK(r.hidden() == 1);
  CHECK(r.proxy(0) == max_loop(g, g.utility(0), 1));
  CHECK_THROWS_AS(reduce_game(g, 1, 1, Evaluator::max()), std::invalid_argument);

  ReducedGame all = reduce_game_all(g, 1, Evaluator::min());
  CHECK(all.observers() == std::vector<int>{0, 2});
  CHECK(all.game().utility(1) == g.utility(1));

  // A hidden player with one action leaves the observer's utility unchanged.
  Game single = testing::random_game({3, 1, 2}, 8);
  for (const auto& f : builtin_evaluators()) CHECK(reduce_game(single, 0, 1, f).proxy(0) == single.utility(0));
}

TEST_CASE("reduced potential") {
  Game pg = random_potential_game({{2, 3, 2}, R("1/5"), 3});
  CHECK(reduced_potential(pg, 1) == max_loop(pg, pg.welfare(), 1));
  CHECK_THROWS_AS(reduced_potential(intro_game(R("1/10")), 1), std::invalid_argument);
}
