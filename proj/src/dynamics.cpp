#include "proxygames/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include <Eigen/SparseLU>

#include "proxygames/graph.hpp"

namespace proxygames {

TransitionMatrix<Rational> abr_transition_matrix(const Game& game) {
  const ProfileSpace& space = game.space();
  const Rational per_player(1, game.players());
  std::vector<Eigen::Triplet<Rational>> triplets;
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    for (int i = 0; i < game.players(); ++i) {
      auto best = best_responses_at(game, i, a);
      Rational p = per_player / Rational(best.size());
      for (int b : best) {
        triplets.emplace_back(static_cast<Eigen::Index>(a),
                              static_cast<Eigen::Index>(space.with_action(a, i, b)), p);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(game.size());
  TransitionMatrix<Rational> p(n, n);
  p.setFromTriplets(triplets.begin(), triplets.end());
  return p;
}

TransitionMatrix<double> lll_transition_matrix(const Game& game, double beta) {
  if (!(beta >= 0)) throw std::invalid_argument("beta must be nonnegative");
  const ProfileSpace& space = game.space();
  const double per_player = 1.0 / game.players();
  std::vector<Eigen::VectorXd> utilities;
  for (int i = 0; i < game.players(); ++i) utilities.push_back(game.utility(i).cast<double>());

  std::vector<Eigen::Triplet<double>> triplets;
  std::vector<double> weights;
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    for (int i = 0; i < game.players(); ++i) {
      auto members = fiber(space, a, i);
      weights.resize(members.size());
      double top = -std::numeric_limits<double>::infinity();
      for (ProfileIndex q : members) top = std::max(top, utilities[i](static_cast<Eigen::Index>(q)));
      double total = 0;
      for (std::size_t k = 0; k < members.size(); ++k) {
        weights[k] = std::exp(beta * (utilities[i](static_cast<Eigen::Index>(members[k])) - top));
        total += weights[k];
      }
      for (std::size_t k = 0; k < members.size(); ++k) {
        triplets.emplace_back(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(members[k]),
                              per_player * weights[k] / total);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(game.size());
  TransitionMatrix<double> p(n, n);
  p.setFromTriplets(triplets.begin(), triplets.end());
  return p;
}

ProfileSet RecurrentClassSet::states() const {
  ProfileSet out;
  for (const auto& c : classes) out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool RecurrentClassSet::contains(ProfileIndex profile) const {
  for (const auto& c : classes) {
    if (std::binary_search(c.begin(), c.end(), profile)) return true;
  }
  return false;
}

RecurrentClassSet recurrent_classes_of(const std::vector<std::vector<std::size_t>>& successors) {
  return RecurrentClassSet{graph::closed_components(successors)};
}

RecurrentClassSet abr_classes(const Game& game) { return recurrent_classes(abr_transition_matrix(game)); }

std::vector<std::vector<ProfileIndex>> best_reply_graph(const Game& game) {
  const ProfileSpace& space = game.space();
  std::vector<std::vector<ProfileIndex>> successors(game.size());
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    for (int i = 0; i < game.players(); ++i) {
      int current = space.action(a, i);
      for (int b : best_responses_at(game, i, a)) {
        if (b != current) successors[a].push_back(space.with_action(a, i, b));
      }
    }
    std::sort(successors[a].begin(), successors[a].end());
  }
  return successors;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Backward BFS from `targets`; next[a] is a successor of a one step closer.
std::vector<ProfileIndex> backward_search(const std::vector<std::vector<ProfileIndex>>& successors,
                                          const ProfileSet& targets, std::vector<bool>& reached) {
  const std::size_t n = successors.size();
  std::vector<std::vector<ProfileIndex>> predecessors(n);
  for (ProfileIndex a = 0; a < n; ++a) {
    for (ProfileIndex b : successors[a]) predecessors[b].push_back(a);
  }
  std::vector<ProfileIndex> next(n, kNone);
  reached.assign(n, false);
  std::deque<ProfileIndex> frontier;
  for (ProfileIndex t : targets) {
    reached[t] = true;
    frontier.push_back(t);
  }
  while (!frontier.empty()) {
    ProfileIndex b = frontier.front();
    frontier.pop_front();
    for (ProfileIndex a : predecessors[b]) {
      if (reached[a]) continue;
      reached[a] = true;
      next[a] = b;
      frontier.push_back(a);
    }
  }
  return next;
}

}  // namespace

std::vector<bool> can_reach(const std::vector<std::vector<ProfileIndex>>& successors, const ProfileSet& targets) {
  std::vector<bool> reached;
  backward_search(successors, targets, reached);
  return reached;
}

WeakAcyclicity is_weakly_acyclic(const Game& game) {
  std::vector<bool> reached;
  auto next = backward_search(best_reply_graph(game), pure_nash_equilibria(game), reached);

  WeakAcyclicity result;
  result.holds = std::all_of(reached.begin(), reached.end(), [](bool r) { return r; });
  result.witness_paths.resize(game.size());
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    if (!reached[a]) continue;
    auto& path = result.witness_paths[a];
    for (ProfileIndex v = a; v != kNone; v = next[v]) path.push_back(v);
  }
  return result;
}

namespace {

// Above this size the dense cubic elimination gives way to sparse LU.
constexpr Eigen::Index kDenseStates = 2000;

// Grassmann-Taksar-Heyman state reduction. Free of subtractions, so tiny
// transition probabilities at large beta keep their relative accuracy.
Eigen::VectorXd gth_stationary(const TransitionMatrix<double>& p) {
  const Eigen::Index n = p.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd(p);
  for (Eigen::Index k = n - 1; k > 0; --k) {
    const double out = a.row(k).head(k).sum();
    a.col(k).head(k) /= out;
    a.topLeftCorner(k, k).noalias() += a.col(k).head(k) * a.row(k).head(k);
  }
  Eigen::VectorXd pi(n);
  pi(0) = 1;
  for (Eigen::Index j = 1; j < n; ++j) pi(j) = pi.head(j).dot(a.col(j).head(j));
  return pi / pi.sum();
}

// (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
Eigen::VectorXd sparse_stationary(const TransitionMatrix<double>& p) {
  const Eigen::Index n = p.rows();
  std::vector<Eigen::Triplet<double>> triplets;
  for (Eigen::Index r = 0; r < p.outerSize(); ++r) {
    for (TransitionMatrix<double>::InnerIterator it(p, r); it; ++it) {
      if (it.col() != n - 1) triplets.emplace_back(it.col(), r, it.value());
    }
  }
  for (Eigen::Index i = 0; i < n - 1; ++i) triplets.emplace_back(i, i, -1.0);
  for (Eigen::Index j = 0; j < n; ++j) triplets.emplace_back(n - 1, j, 1.0);
  Eigen::SparseMatrix<double> system(n, n);
  system.setFromTriplets(triplets.begin(), triplets.end());
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs(n - 1) = 1.0;

  Eigen::SparseLU<Eigen::SparseMatrix<double>> solver;
  solver.compute(system);
  if (solver.info() != Eigen::Success) throw std::runtime_error("stationary system factorization failed");
  return solver.solve(rhs);
}

}  // namespace

Eigen::VectorXd stationary_distribution(const TransitionMatrix<double>& p) {
  const Eigen::Index n = p.rows();
  if (n == 0 || p.cols() != n) throw std::invalid_argument("transition matrix must be square and nonempty");
  if (graph::strongly_connected_components(positive_successors(p)).size() != 1) {
    throw NotErgodic("chain is not irreducible; the stationary distribution is not unique");
  }

  Eigen::VectorXd pi = n <= kDenseStates ? gth_stationary(p) : sparse_stationary(p);
  double residual = (Eigen::RowVectorXd(pi.transpose()) * p - pi.transpose()).cwiseAbs().maxCoeff();
  residual = std::max(residual, std::abs(pi.sum() - 1.0));
  if (!(residual <= 1e-12)) {
    throw std::runtime_error("stationary distribution residual " + std::to_string(residual) + " exceeds 1e-12");
  }
  return pi;
}

Rational single_step_resistance(const Game& game, ProfileIndex profile, int player, int action) {
  const ProfileSpace& space = game.space();
  const Payoffs& u = game.utility(player);
  Rational best = u(static_cast<Eigen::Index>(space.fiber_base(profile, player)));
  for (ProfileIndex q : fiber(space, profile, player)) best = std::max(best, u(static_cast<Eigen::Index>(q)));
  return best - u(static_cast<Eigen::Index>(space.with_action(profile, player, action)));
}

ResistanceGraph resistance_graph(const Game& game) {
  const ProfileSpace& space = game.space();
  ResistanceGraph out;
  out.classes = abr_classes(game).classes;
  const auto k = static_cast<Eigen::Index>(out.classes.size());
  out.resistance = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>::Zero(k, k);
  if (k <= 1) return out;

  // One arc per unilateral change of action, weighted by its resistance.
  graph::WeightedAdjacency arcs(game.size());
  for (int i = 0; i < game.players(); ++i) {
    const Payoffs& u = game.utility(i);
    for (ProfileIndex a = 0; a < game.size(); ++a) {
      if (space.action(a, i) != 0) continue;
      auto members = fiber(space, a, i);
      Rational best = u(static_cast<Eigen::Index>(members.front()));
      for (ProfileIndex q : members) best = std::max(best, u(static_cast<Eigen::Index>(q)));
      for (ProfileIndex from : members) {
        for (ProfileIndex to : members) {
          if (from != to) arcs[from].push_back({to, best - u(static_cast<Eigen::Index>(to))});
        }
      }
    }
  }

  for (Eigen::Index c = 0; c < k; ++c) {
    auto dist = graph::shortest_distances(arcs, out.classes[c]);
    for (Eigen::Index d = 0; d < k; ++d) {
      if (c == d) continue;
      std::optional<Rational> best;
      for (ProfileIndex s : out.classes[d]) {
        if (dist[s] && (!best || *dist[s] < *best)) best = dist[s];
      }
      // Every profile is reachable through unilateral moves.
      out.resistance(c, d) = *best;
    }
  }
  return out;
}

Payoffs stochastic_potentials(const ResistanceGraph& graph) {
  const auto k = static_cast<std::size_t>(graph.classes.size());
  graph::ArcMatrix arcs(k, std::vector<std::optional<Rational>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j) arcs[i][j] = graph.resistance(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
    }
  }
  Payoffs potentials(static_cast<Eigen::Index>(k));
  for (std::size_t root = 0; root < k; ++root) {
    potentials(static_cast<Eigen::Index>(root)) = *graph::min_in_arborescence(arcs, root);
  }
  return potentials;
}

ProfileSet stochastically_stable_exact(const Game& game) {
  ResistanceGraph g = resistance_graph(game);
  if (g.classes.size() == 1) return g.classes.front();
  Payoffs potentials = stochastic_potentials(g);
  Rational least = potentials.minCoeff();
  ProfileSet out;
  for (Eigen::Index c = 0; c < potentials.size(); ++c) {
    if (potentials(c) == least) out.insert(out.end(), g.classes[c].begin(), g.classes[c].end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SweepResult stochastically_stable_sweep(const Game& game, const std::vector<double>& beta_schedule,
                                        double mass_threshold) {
  if (beta_schedule.empty()) throw std::invalid_argument("beta schedule is empty");
  for (std::size_t i = 1; i < beta_schedule.size(); ++i) {
    if (!(beta_schedule[i] > beta_schedule[i - 1])) throw std::invalid_argument("beta schedule must increase");
  }
  if (!(mass_threshold > 0 && mass_threshold < 1)) throw std::invalid_argument("mass threshold must lie in (0,1)");

  std::vector<Eigen::VectorXd> distributions;
  for (double beta : beta_schedule) distributions.push_back(stationary_distribution(lll_transition_matrix(game, beta)));

  SweepResult result;
  const Eigen::VectorXd& last = distributions.back();
  const double cutoff = mass_threshold / static_cast<double>(game.size());
  for (Eigen::Index a = 0; a < last.size(); ++a) {
    if (last(a) >= cutoff) result.states.push_back(static_cast<ProfileIndex>(a));
  }
  for (const auto& pi : distributions) {
    double mass = 0;
    for (ProfileIndex a : result.states) mass += pi(static_cast<Eigen::Index>(a));
    result.selected_mass.push_back(mass);
  }
  result.conclusive = true;
  for (std::size_t i = 1; i < result.selected_mass.size(); ++i) {
    if (result.selected_mass[i] < result.selected_mass[i - 1] - 1e-9) result.conclusive = false;
  }
  return result;
}

}  // namespace proxygames
