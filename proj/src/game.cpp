#include "proxygames/game.hpp"

#include <algorithm>
#include <stdexcept>

namespace proxygames {

ProfileSpace::ProfileSpace(std::vector<int> action_counts) : counts_(std::move(action_counts)) {
  if (counts_.empty()) throw std::invalid_argument("a game needs at least one player");
  strides_.assign(counts_.size(), 1);
  size_ = 1;
  for (int i = players() - 1; i >= 0; --i) {
    if (counts_[i] <= 0) {
      throw std::invalid_argument("player " + std::to_string(i + 1) + " has no actions");
    }
    strides_[i] = size_;
    size_ *= static_cast<std::size_t>(counts_[i]);
  }
}

ProfileIndex ProfileSpace::index(std::span<const int> profile) const {
  if (profile.size() != counts_.size()) {
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) + " actions, expected " +
                                std::to_string(counts_.size()));
  }
  ProfileIndex flat = 0;
  for (int i = 0; i < players(); ++i) {
    if (profile[i] < 0 || profile[i] >= counts_[i]) {
      throw std::out_of_range("action " + std::to_string(profile[i]) + " out of range for player " +
                              std::to_string(i + 1));
    }
    flat += static_cast<std::size_t>(profile[i]) * strides_[i];
  }
  return flat;
}

ActionProfile ProfileSpace::profile(ProfileIndex index) const {
  if (index >= size_) throw std::out_of_range("profile index out of range");
  ActionProfile result(counts_.size());
  for (int i = 0; i < players(); ++i) result[i] = action(index, i);
  return result;
}

Game::Game(std::vector<int> action_counts, std::vector<Payoffs> utilities, Payoffs welfare,
           bool normalized, Labels labels)
    : space_(std::move(action_counts)), normalized_(normalized), labels_(std::move(labels)) {
  if (utilities.size() != static_cast<std::size_t>(space_.players())) {
    throw std::invalid_argument("expected " + std::to_string(space_.players()) + " utility tensors, got " +
                                std::to_string(utilities.size()));
  }
  for (auto& u : utilities) utilities_.push_back(std::make_shared<const Payoffs>(std::move(u)));
  check_utilities();
  if (static_cast<std::size_t>(welfare.size()) != space_.size()) {
    throw std::invalid_argument("welfare has " + std::to_string(welfare.size()) + " entries, expected " +
                                std::to_string(space_.size()));
  }
  if (normalized_) {
    if (welfare.minCoeff() < 0) throw std::invalid_argument("normalized welfare has a negative entry");
    if (welfare.maxCoeff() != 1) throw std::invalid_argument("normalized welfare must have maximum exactly 1");
  }
  welfare_ = std::make_shared<const Payoffs>(std::move(welfare));

  if (!labels_.empty()) {
    if (labels_.size() != static_cast<std::size_t>(space_.players())) {
      throw std::invalid_argument("labels must list every player");
    }
    for (int i = 0; i < space_.players(); ++i) {
      if (labels_[i].size() != static_cast<std::size_t>(space_.count(i))) {
        throw std::invalid_argument("player " + std::to_string(i + 1) + " has " +
                                    std::to_string(labels_[i].size()) + " labels for " +
                                    std::to_string(space_.count(i)) + " actions");
      }
    }
  }
}

void Game::check_utilities() const {
  for (std::size_t i = 0; i < utilities_.size(); ++i) {
    if (static_cast<std::size_t>(utilities_[i]->size()) != space_.size()) {
      throw std::invalid_argument("utility tensor of player " + std::to_string(i + 1) + " has " +
                                  std::to_string(utilities_[i]->size()) + " entries, expected " +
                                  std::to_string(space_.size()));
    }
  }
}

const Payoffs& Game::utility(int player) const {
  if (player < 0 || player >= players()) {
    throw std::out_of_range("invalid player index " + std::to_string(player));
  }
  return *utilities_[player];
}

Game Game::with_utilities(std::vector<Payoffs> utilities) const {
  if (utilities.size() != utilities_.size()) throw std::invalid_argument("utility count mismatch");
  Game result;
  result.space_ = space_;
  result.welfare_ = welfare_;
  result.normalized_ = normalized_;
  result.labels_ = labels_;
  for (auto& u : utilities) result.utilities_.push_back(std::make_shared<const Payoffs>(std::move(u)));
  result.check_utilities();
  return result;
}

std::string Game::describe(ProfileIndex index) const {
  std::string out = "(";
  for (int i = 0; i < players(); ++i) {
    if (i > 0) out += ",";
    int a = space_.action(index, i);
    out += labels_.empty() ? std::to_string(a) : labels_[i][a];
  }
  return out + ")";
}

std::vector<ProfileIndex> fiber(const ProfileSpace& space, ProfileIndex index, int player) {
  std::vector<ProfileIndex> out(static_cast<std::size_t>(space.count(player)));
  ProfileIndex base = space.fiber_base(index, player);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = base + k * space.stride(player);
  return out;
}

std::vector<int> best_responses_at(const Game& game, int player, ProfileIndex profile) {
  const Payoffs& u = game.utility(player);
  const ProfileSpace& space = game.space();
  ProfileIndex base = space.fiber_base(profile, player);
  std::size_t stride = space.stride(player);
  Rational best = u(static_cast<Eigen::Index>(base));
  std::vector<int> result{0};
  for (int a = 1; a < space.count(player); ++a) {
    const Rational& v = u(static_cast<Eigen::Index>(base + a * stride));
    if (v > best) {
      best = v;
      result.assign(1, a);
    } else if (v == best) {
      result.push_back(a);
    }
  }
  return result;
}

std::vector<int> best_response_set(const Game& game, int player, std::span<const int> others) {
  if (player < 0 || player >= game.players()) {
    throw std::out_of_range("invalid player index " + std::to_string(player));
  }
  if (others.size() != static_cast<std::size_t>(game.players() - 1)) {
    throw std::invalid_argument("partial profile has " + std::to_string(others.size()) +
                                " actions, expected " + std::to_string(game.players() - 1));
  }
  ActionProfile full;
  full.reserve(game.players());
  for (int i = 0, k = 0; i < game.players(); ++i) full.push_back(i == player ? 0 : others[k++]);
  return best_responses_at(game, player, game.space().index(full));
}

bool is_best_response(const Game& game, int player, ProfileIndex profile) {
  const Payoffs& u = game.utility(player);
  const ProfileSpace& space = game.space();
  const Rational& current = u(static_cast<Eigen::Index>(profile));
  for (ProfileIndex q : fiber(space, profile, player)) {
    if (u(static_cast<Eigen::Index>(q)) > current) return false;
  }
  return true;
}

ProfileSet pure_nash_equilibria(const Game& game) {
  ProfileSet result;
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    bool stable = true;
    for (int i = 0; i < game.players() && stable; ++i) stable = is_best_response(game, i, a);
    if (stable) result.push_back(a);
  }
  return result;
}

Rational inconsequentiality(const Game& game, int player, int other) {
  if (player == other) throw std::invalid_argument("inconsequentiality needs two distinct players");
  if (other < 0 || other >= game.players()) throw std::out_of_range("invalid player index");
  const Payoffs& u = game.utility(player);
  const ProfileSpace& space = game.space();
  Rational eps = 0;
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    if (space.action(a, other) != 0) continue;
    Rational lo = u(static_cast<Eigen::Index>(a)), hi = lo;
    for (ProfileIndex q : fiber(space, a, other)) {
      const Rational& v = u(static_cast<Eigen::Index>(q));
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    eps = std::max(eps, Rational(hi - lo));
  }
  return eps;
}

PotentialCheck verify_potential(const Game& game) {
  const ProfileSpace& space = game.space();
  const Payoffs& w = game.welfare();
  PotentialCheck check{true, Rational(0)};
  for (int i = 0; i < game.players(); ++i) {
    // U_i - W must be constant along every fiber of player i.
    Payoffs gap = game.utility(i) - w;
    for (ProfileIndex a = 0; a < game.size(); ++a) {
      if (space.action(a, i) != 0) continue;
      Rational lo = gap(static_cast<Eigen::Index>(a)), hi = lo;
      for (ProfileIndex q : fiber(space, a, i)) {
        lo = std::min(lo, gap(static_cast<Eigen::Index>(q)));
        hi = std::max(hi, gap(static_cast<Eigen::Index>(q)));
      }
      check.max_violation = std::max(check.max_violation, Rational(hi - lo));
    }
  }
  check.holds = check.max_violation == 0;
  return check;
}

bool is_identical_interest(const Game& game) {
  for (int i = 0; i < game.players(); ++i) {
    if (game.utility(i) != game.welfare()) return false;
  }
  return true;
}

ProfileSet welfare_maximizers(const Game& game) {
  const Payoffs& w = game.welfare();
  Rational best = w.maxCoeff();
  ProfileSet result;
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    if (w(static_cast<Eigen::Index>(a)) == best) result.push_back(a);
  }
  return result;
}

}  // namespace proxygames
