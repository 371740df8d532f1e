#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "proxygames/evaluators.hpp"
#include "proxygames/game.hpp"
#include "proxygames/constructions.hpp"

namespace proxygames {

enum class Concept { PNE, ABR, SS };

std::string_view to_string(Concept c);
/// "pne" | "abr" | "ss" (case-insensitive).
Concept parse_concept(std::string_view text);

/// Equilibrium states of a game under a concept. Recurrent classes are
/// flattened to their member states.
ProfileSet equilibrium_states(const Game& game, Concept c);

/// Welfare comparison of a reduced game against its nominal game. All welfare
/// values are nominal W. A ratio is nullopt when its denominator is zero.
struct QualityReport {
  Concept solution = Concept::PNE;
  ProfileSet nominal_states;
  ProfileSet reduced_states;
  Rational nominal_welfare_min, nominal_welfare_max;
  Rational reduced_welfare_min, reduced_welfare_max;
  std::optional<Rational> q_minus;  // reduced max / nominal min
  std::optional<Rational> q_plus;   // reduced min / nominal max
};

QualityReport quality_report(const Game& nominal, const ReducedGame& reduced, Concept c);

/// Optimistic quality. Throws std::domain_error when the nominal minimum
/// welfare is zero.
QualityReport quality_minus(const Game& nominal, const ReducedGame& reduced, Concept c);

/// Pessimistic quality. Throws std::domain_error when the nominal maximum
/// welfare is zero.
QualityReport quality_plus(const Game& nominal, const ReducedGame& reduced, Concept c);

/// Largest discrepancy between the two games' unilateral utility differences.
/// Throws std::invalid_argument when the games have different shapes.
Rational max_pairwise_difference(const Game& first, const Game& second);

enum class Verdict { Pass, Fail, NotApplicable };

std::string_view to_string(Verdict v);

struct TheoremVerdict {
  std::string theorem;
  std::string instance;
  /// The inequality or equality being checked, in words.
  std::string claim;
  Rational bound;
  Rational measured;
  Verdict verdict = Verdict::Fail;
  std::vector<ProfileIndex> witnesses;
  std::string detail;

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Largest inconsequentiality of the hidden player to any observer.
Rational hiding_level(const Game& game, const ReducedGame& reduced);

/// MPD(G, G_f) <= 2 eps and every stochastically stable state of G_f has
/// welfare >= max{0, 1 - 8 eps (|A| - 1)}, with eps the hiding level.
TheoremVerdict candogan_bound_check(const Game& game, const ReducedGame& reduced);

struct CertificateVerdict {
  TheoremVerdict verdict;
  /// The argmax inclusion against the reduced potential, at every context.
  bool premise_holds = false;
  /// Weak acyclicity with the nominal equilibrium as the unique PNE.
  bool conclusion_holds = false;
  /// Contexts (as profiles with the observer and hidden player at 0) where the premise fails.
  std::vector<ProfileIndex> failing_contexts;
};

/// Coarse potential alignment: if the observer's proxy best responses lie
/// inside the reduced potential's, the proxy game keeps the nominal unique
/// equilibrium and stays weakly acyclic. `proxy` must be constant along the
/// hidden coordinate.
CertificateVerdict coarse_alignment_certificate(const Game& game, const Payoffs& proxy, int hidden,
                                                int observer = 0);

// Checkers for the individual results. Each one rebuilds the instance,
// checks the class precondition, and re-derives the claim exactly.

/// Introduction game: for every evaluator the reduced game has the single
/// equilibrium (B,B,right) and Q-_ABR = 5 delta / (3 - delta).
std::vector<TheoremVerdict> check_intro(const Rational& delta, const std::vector<Evaluator>& evaluators);

/// All games: picks delta below 3 eps / (5 + eps) and checks Q-_ABR <= eps.
std::vector<TheoremVerdict> check_all_games_bad(const Rational& eps, const std::vector<Evaluator>& evaluators);

/// Staggered potential game under asynchronous best replies.
std::vector<TheoremVerdict> check_potential_abr(const Rational& eps, const std::vector<Evaluator>& evaluators);

/// Staggered potential game under log-linear learning.
std::vector<TheoremVerdict> check_potential_ss(const Rational& eps, const std::vector<Evaluator>& evaluators);

/// Identical interest with the max evaluator: every welfare maximizer stays
/// an equilibrium and no new equilibria appear.
TheoremVerdict check_identical_interest_pne(const Game& game, int observer = 0, int hidden = 1);

/// Block identical-interest game under log-linear learning.
std::vector<TheoremVerdict> check_identical_interest_ss(const Rational& eps, const std::vector<Evaluator>& evaluators);

/// Hiding one player from everyone in an identical-interest game: every
/// stochastically stable state keeps welfare >= 1 - eps.
TheoremVerdict check_universal_hiding(const Game& game, int hidden = 1);

/// Tightness of the universal-hiding bound on the block game's first block:
/// some reduced-potential maximizer has welfare exactly 1 - eps.
TheoremVerdict check_universal_hiding_tightness(const Rational& eps);

/// With a 0-inconsequential hidden player the recurrent classes do not change.
TheoremVerdict check_zero_inconsequential(const Game& game, const Evaluator& f, int observer = 0, int hidden = 1);

/// Acceptability axioms and boundedness of an evaluator on sampled lists.
TheoremVerdict check_evaluator_axioms(const Evaluator& f, std::size_t trials, std::uint64_t seed);

struct SuiteOptions {
  int observer = 0;
  int hidden = 1;
};

/// Runs every instance-level checker whose class precondition the game meets;
/// the others are reported NotApplicable with the failed precondition.
std::vector<TheoremVerdict> theorem_suite(const Game& game, const std::vector<Evaluator>& evaluators,
                                          const SuiteOptions& options = {});

}  // namespace proxygames
