#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "proxygames/game.hpp"

namespace proxygames {

enum class EvaluatorKind { Sum, Max, Min, Mean, Custom };

/// Maps the list of payoffs a player could be receiving (one entry per action
/// of the hidden player) to a single proxy payoff.
///
/// Inputs are multisets: duplicates are kept, order is irrelevant.
class Evaluator {
 public:
  using Function = std::function<Rational(std::span<const Rational>)>;
  using Table = std::map<std::vector<Rational>, Rational>;

  static Evaluator sum();
  static Evaluator max();
  static Evaluator min();
  static Evaluator mean();
  /// User-supplied evaluator. `bounded` is a declaration; check_boundedness tests it.
  static Evaluator custom(std::string name, Function fn, bool bounded);
  /// Custom evaluator given as an explicit table keyed by the sorted input list.
  /// Evaluating a list missing from the table throws std::out_of_range.
  static Evaluator from_table(Table table, bool bounded, std::string name = "custom");
  /// "sum" | "max" | "min" | "mean".
  static Evaluator by_name(std::string_view name);

  EvaluatorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  bool bounded() const { return bounded_; }

  /// Throws std::invalid_argument on an empty list.
  Rational operator()(std::span<const Rational> values) const;

 private:
  Evaluator(EvaluatorKind kind, std::string name, bool bounded, Function fn = {})
      : kind_(kind), name_(std::move(name)), bounded_(bounded), fn_(std::move(fn)) {}

  EvaluatorKind kind_;
  std::string name_;
  bool bounded_;
  Function fn_;
};

inline Rational evaluate(const Evaluator& f, std::span<const Rational> values) { return f(values); }

/// The four evaluators with analytic acceptability proofs.
std::vector<Evaluator> builtin_evaluators();

struct ListPair {
  std::vector<Rational> dominant;
  std::vector<Rational> dominated;
};

struct AcceptabilityReport {
  std::size_t trials = 0;
  /// Pairs with sorted(dominant) > sorted(dominated) elementwise but f not strictly larger.
  std::vector<ListPair> axiom1_violations;
  /// Pairs holding the same multiset in different orders with different outputs.
  std::vector<ListPair> axiom2_violations;

  bool acceptable() const { return axiom1_violations.empty() && axiom2_violations.empty(); }
};

/// Samples `trials` pairs of equal-length lists and tests both acceptability axioms.
AcceptabilityReport check_acceptability(const Evaluator& f, std::size_t trials, std::uint64_t seed);

/// Lists where f(S) falls outside [min S, max S]. Besides sampled lists this
/// always probes a few fixed witnesses with repeated and negative entries.
std::vector<std::vector<Rational>> check_boundedness(const Evaluator& f, std::size_t trials,
                                                     std::uint64_t seed);

/// Game in which some observers replaced their utilities with proxy payoffs
/// that ignore the hidden player's action. Lives on the full joint action
/// space; each proxy tensor is constant along the hidden coordinate.
class ReducedGame {
 public:
  ReducedGame(Game base, Game reduced, std::vector<int> observers, int hidden, Evaluator evaluator)
      : base_(std::move(base)),
        game_(std::move(reduced)),
        observers_(std::move(observers)),
        hidden_(hidden),
        evaluator_(std::move(evaluator)) {}

  const Game& base() const { return base_; }
  const Game& game() const { return game_; }
  const std::vector<int>& observers() const { return observers_; }
  int hidden() const { return hidden_; }
  const Evaluator& evaluator() const { return evaluator_; }
  const Payoffs& proxy(int observer) const { return game_.utility(observer); }

 private:
  Game base_;
  Game game_;
  std::vector<int> observers_;
  int hidden_;
  Evaluator evaluator_;
};

/// Replaces each entry of `tensor` by f over its fiber along `hidden`.
Payoffs collapse_along(const Payoffs& tensor, const ProfileSpace& space, int hidden, const Evaluator& f);

ReducedGame reduce_game(const Game& game, int observer, int hidden, const Evaluator& f);

/// Every player except `hidden` applies f; the hidden player keeps its utility.
ReducedGame reduce_game_all(const Game& game, int hidden, const Evaluator& f);

/// Max of W over the hidden player's actions, constant along that coordinate.
/// Throws std::invalid_argument when the game is not a potential game.
Payoffs reduced_potential(const Game& game, int hidden);

}  // namespace proxygames
