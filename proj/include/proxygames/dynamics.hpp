#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Sparse>

#include "proxygames/game.hpp"

namespace proxygames {

/// Row-stochastic transition matrix over flat profile indices. Exact
/// (Rational) for the best-reply process, double for log-linear learning.
template <typename Scalar>
using TransitionMatrix = Eigen::SparseMatrix<Scalar, Eigen::RowMajor>;

/// Thrown when a stationary distribution is requested for a chain that is
/// not irreducible.
class NotErgodic : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Asynchronous best reply: a uniformly drawn player moves to a uniformly
/// drawn best response. Repeating the current action is a self-loop.
TransitionMatrix<Rational> abr_transition_matrix(const Game& game);

/// Log-linear learning at rationality beta >= 0.
TransitionMatrix<double> lll_transition_matrix(const Game& game, double beta);

/// Closed communicating classes of the positive-entry digraph.
struct RecurrentClassSet {
  std::vector<ProfileSet> classes;

  /// All member states, sorted.
  ProfileSet states() const;
  bool contains(ProfileIndex profile) const;
};

template <typename Scalar>
std::vector<std::vector<std::size_t>> positive_successors(const TransitionMatrix<Scalar>& p) {
  std::vector<std::vector<std::size_t>> out(static_cast<std::size_t>(p.rows()));
  for (Eigen::Index r = 0; r < p.outerSize(); ++r) {
    for (typename TransitionMatrix<Scalar>::InnerIterator it(p, r); it; ++it) {
      if (it.value() > 0) out[static_cast<std::size_t>(r)].push_back(static_cast<std::size_t>(it.col()));
    }
  }
  return out;
}

RecurrentClassSet recurrent_classes_of(const std::vector<std::vector<std::size_t>>& successors);

template <typename Scalar>
RecurrentClassSet recurrent_classes(const TransitionMatrix<Scalar>& p) {
  return recurrent_classes_of(positive_successors(p));
}

/// ABR(G): recurrent classes of the asynchronous best-reply chain.
RecurrentClassSet abr_classes(const Game& game);

/// Best-reply arcs: a -> (b, a_{-i}) for every player i and every best
/// response b != a_i. Successor lists are sorted.
std::vector<std::vector<ProfileIndex>> best_reply_graph(const Game& game);

/// Profiles from which some best-reply path reaches `targets` (targets included).
std::vector<bool> can_reach(const std::vector<std::vector<ProfileIndex>>& successors, const ProfileSet& targets);

struct WeakAcyclicity {
  bool holds = false;
  /// Indexed by profile: a best-reply path from that profile ending at a pure
  /// Nash equilibrium, or empty when none exists.
  std::vector<std::vector<ProfileIndex>> witness_paths;
};

WeakAcyclicity is_weakly_acyclic(const Game& game);

/// Solves pi P = pi, sum(pi) = 1 by state reduction (sparse LU for very
/// large chains). Throws NotErgodic for reducible chains and
/// std::runtime_error if the residual exceeds 1e-12.
Eigen::VectorXd stationary_distribution(const TransitionMatrix<double>& p);

/// Resistance of the log-linear move from `profile` to (action, profile_{-player}):
/// the payoff deficit of `action` against the player's best response.
Rational single_step_resistance(const Game& game, ProfileIndex profile, int player, int action);

/// Resistances between the recurrent classes of the unperturbed chain.
struct ResistanceGraph {
  std::vector<ProfileSet> classes;
  /// resistance(i, j): least total resistance of a path from class i to class j.
  Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic> resistance;
};

ResistanceGraph resistance_graph(const Game& game);

/// Stochastic potential of each class: weight of its minimum in-tree.
Payoffs stochastic_potentials(const ResistanceGraph& graph);

/// Stochastically stable states of log-linear learning, exactly.
ProfileSet stochastically_stable_exact(const Game& game);

struct SweepResult {
  ProfileSet states;
  bool conclusive = false;
  /// Mass on `states` at each beta of the schedule.
  std::vector<double> selected_mass;
};

/// Numeric cross-check of stochastic stability from stationary distributions
/// along an increasing beta schedule. Selects states holding at least
/// threshold / |A| at the largest beta; the result is conclusive only when the
/// selected mass does not decrease along the schedule.
SweepResult stochastically_stable_sweep(const Game& game, const std::vector<double>& beta_schedule,
                                        double mass_threshold);

}  // namespace proxygames
