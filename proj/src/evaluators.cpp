#include "proxygames/evaluators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace proxygames {

Evaluator Evaluator::sum() {
  return {EvaluatorKind::Sum, "sum", false};
}
Evaluator Evaluator::max() {
  return {EvaluatorKind::Max, "max", true};
}
Evaluator Evaluator::min() {
  return {EvaluatorKind::Min, "min", true};
}
Evaluator Evaluator::mean() {
  return {EvaluatorKind::Mean, "mean", true};
}

Evaluator Evaluator::custom(std::string name, Function fn, bool bounded) {
  if (!fn) throw std::invalid_argument("custom evaluator needs a function");
  return {EvaluatorKind::Custom, std::move(name), bounded, std::move(fn)};
}

Evaluator Evaluator::from_table(Table table, bool bounded, std::string name) {
  for (const auto& [key, value] : table) {
    if (!std::is_sorted(key.begin(), key.end())) {
      throw std::invalid_argument("evaluator table keys must be sorted ascending");
    }
  }
  auto shared = std::make_shared<const Table>(std::move(table));
  Function fn = [shared](std::span<const Rational> values) {
    std::vector<Rational> key(values.begin(), values.end());
    std::sort(key.begin(), key.end());
    auto it = shared->find(key);
    if (it == shared->end()) {
      std::string text = "[";
      for (std::size_t i = 0; i < key.size(); ++i) text += (i ? ", " : "") + to_string(key[i]);
      throw std::out_of_range("custom evaluator table has no entry for " + text + "]");
    }
    return it->second;
  };
  return {EvaluatorKind::Custom, std::move(name), bounded, std::move(fn)};
}

Evaluator Evaluator::by_name(std::string_view name) {
  if (name == "sum") return sum();
  if (name == "max") return max();
  if (name == "min") return min();
  if (name == "mean") return mean();
  throw std::invalid_argument("unknown evaluator \"" + std::string(name) + "\" (expected sum, max, min or mean)");
}

Rational Evaluator::operator()(std::span<const Rational> values) const {
  if (values.empty()) throw std::invalid_argument("evaluator applied to an empty list");
  switch (kind_) {
    case EvaluatorKind::Sum:
      return std::accumulate(values.begin(), values.end(), Rational(0));
    case EvaluatorKind::Max:
      return *std::max_element(values.begin(), values.end());
    case EvaluatorKind::Min:
      return *std::min_element(values.begin(), values.end());
    case EvaluatorKind::Mean:
      return std::accumulate(values.begin(), values.end(), Rational(0)) / Rational(values.size());
    case EvaluatorKind::Custom:
      return fn_(values);
  }
  throw std::logic_error("unreachable evaluator kind");
}

std::vector<Evaluator> builtin_evaluators() {
  return {Evaluator::sum(), Evaluator::max(), Evaluator::min(), Evaluator::mean()};
}

namespace {

// Rationals with small denominators, including negatives and repeats.
std::vector<Rational> sample_list(std::mt19937_64& rng, std::size_t length) {
  std::uniform_int_distribution<int> numerator(-40, 40);
  std::uniform_int_distribution<int> denominator(1, 8);
  std::vector<Rational> out(length);
  for (auto& v : out) v = Rational(numerator(rng), denominator(rng));
  return out;
}

}  // namespace

AcceptabilityReport check_acceptability(const Evaluator& f, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, 6);
  std::uniform_int_distribution<int> bump(1, 12);
  std::uniform_int_distribution<int> tie(0, 3);

  AcceptabilityReport report;
  report.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t k = length_dist(rng);
    std::vector<Rational> lower = sample_list(rng, k);
    std::sort(lower.begin(), lower.end());

    // Axiom 1: strictly dominate elementwise after sorting. Adding positive
    // increments to a sorted list and re-sorting keeps order statistics
    // strictly above the original ones.
    std::vector<Rational> upper = lower;
    for (auto& v : upper) v += Rational(bump(rng), 16);
    std::sort(upper.begin(), upper.end());
    if (!(f(upper) > f(lower))) report.axiom1_violations.push_back({upper, lower});

    // Axiom 2: same multiset, scrambled order.
    std::vector<Rational> same = lower;
    if (k > 1 && tie(rng) == 0) same[1] = same[0];  // exercise duplicates
    std::vector<Rational> scrambled = same;
    std::shuffle(scrambled.begin(), scrambled.end(), rng);
    if (f(same) != f(scrambled)) report.axiom2_violations.push_back({scrambled, same});
  }
  return report;
}

std::vector<std::vector<Rational>> check_boundedness(const Evaluator& f, std::size_t trials,
                                                     std::uint64_t seed) {
  std::vector<std::vector<Rational>> probes = {
      {Rational(1), Rational(1)},
      {Rational(1), Rational(2), Rational(3)},
      {Rational(-1), Rational(-2)},
      {Rational(1, 2)},
  };
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length_dist(1, 6);
  for (std::size_t t = 0; t < trials; ++t) probes.push_back(sample_list(rng, length_dist(rng)));

  std::vector<std::vector<Rational>> violations;
  for (const auto& s : probes) {
    Rational out = f(s);
    auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    if (out < *lo || out > *hi) violations.push_back(s);
  }
  return violations;
}

Payoffs collapse_along(const Payoffs& tensor, const ProfileSpace& space, int hidden, const Evaluator& f) {
  Payoffs out(tensor.size());
  std::vector<Rational> values(static_cast<std::size_t>(space.count(hidden)));
  for (ProfileIndex a = 0; a < space.size(); ++a) {
    if (space.action(a, hidden) != 0) continue;
    auto members = fiber(space, a, hidden);
    for (std::size_t k = 0; k < members.size(); ++k) values[k] = tensor(static_cast<Eigen::Index>(members[k]));
    Rational proxy = f(values);
    for (ProfileIndex q : members) out(static_cast<Eigen::Index>(q)) = proxy;
  }
  return out;
}

namespace {

void check_player(const Game& game, int player, const char* role) {
  if (player < 0 || player >= game.players()) {
    throw std::out_of_range(std::string("invalid ") + role + " index " + std::to_string(player));
  }
}

}  // namespace

ReducedGame reduce_game(const Game& game, int observer, int hidden, const Evaluator& f) {
  check_player(game, observer, "observer");
  check_player(game, hidden, "hidden player");
  if (observer == hidden) throw std::invalid_argument("observer and hidden player must differ");
  std::vector<Payoffs> utilities;
  for (int i = 0; i < game.players(); ++i) {
    utilities.push_back(i == observer ? collapse_along(game.utility(i), game.space(), hidden, f)
                                      : game.utility(i));
  }
  return ReducedGame(game, game.with_utilities(std::move(utilities)), {observer}, hidden, f);
}

ReducedGame reduce_game_all(const Game& game, int hidden, const Evaluator& f) {
  check_player(game, hidden, "hidden player");
  std::vector<Payoffs> utilities;
  std::vector<int> observers;
  for (int i = 0; i < game.players(); ++i) {
    if (i == hidden) {
      utilities.push_back(game.utility(i));
    } else {
      utilities.push_back(collapse_along(game.utility(i), game.space(), hidden, f));
      observers.push_back(i);
    }
  }
  return ReducedGame(game, game.with_utilities(std::move(utilities)), std::move(observers), hidden, f);
}

Payoffs reduced_potential(const Game& game, int hidden) {
  check_player(game, hidden, "hidden player");
  if (!verify_potential(game).holds) throw std::invalid_argument("reduced potential needs a potential game");
  return collapse_along(game.welfare(), game.space(), hidden, Evaluator::max());
}

}  // namespace proxygames
