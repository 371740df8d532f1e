#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "proxygames/rational.hpp"

namespace proxygames {

/// One action index per player. Players are 0-based internally.
using ActionProfile = std::vector<int>;

/// Flat offset of an action profile, row-major with player 0 slowest.
using ProfileIndex = std::size_t;

/// Set of profiles, always sorted ascending by flat index.
using ProfileSet = std::vector<ProfileIndex>;

/// Row-major layout of the joint action space A = A_1 x ... x A_n.
class ProfileSpace {
 public:
  ProfileSpace() = default;
  explicit ProfileSpace(std::vector<int> action_counts);

  int players() const { return static_cast<int>(counts_.size()); }
  int count(int player) const { return counts_[player]; }
  const std::vector<int>& counts() const { return counts_; }
  std::size_t size() const { return size_; }
  std::size_t stride(int player) const { return strides_[player]; }

  ProfileIndex index(std::span<const int> profile) const;
  ActionProfile profile(ProfileIndex index) const;

  int action(ProfileIndex index, int player) const {
    return static_cast<int>((index / strides_[player]) % static_cast<std::size_t>(counts_[player]));
  }
  ProfileIndex with_action(ProfileIndex index, int player, int action) const {
    return index - static_cast<std::size_t>(this->action(index, player)) * strides_[player] +
           static_cast<std::size_t>(action) * strides_[player];
  }
  /// First profile of the fiber through `index` along `player`.
  ProfileIndex fiber_base(ProfileIndex index, int player) const { return with_action(index, player, 0); }

  bool operator==(const ProfileSpace& other) const { return counts_ == other.counts_; }

 private:
  std::vector<int> counts_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

/// Finite strategic-form game with exact payoffs.
///
/// Utilities are the payoffs players act on; welfare is the nominal objective W
/// and is never replaced, even when a reduced game swaps in proxy utilities.
/// Tensors are shared and immutable, so copies are cheap.
class Game {
 public:
  using Labels = std::vector<std::vector<std::string>>;

  /// Throws std::invalid_argument when shapes disagree or a declared
  /// normalization (min W >= 0, max W == 1) does not hold.
  Game(std::vector<int> action_counts, std::vector<Payoffs> utilities, Payoffs welfare,
       bool normalized = true, Labels labels = {});

  int players() const { return space_.players(); }
  const std::vector<int>& action_counts() const { return space_.counts(); }
  const ProfileSpace& space() const { return space_; }
  std::size_t size() const { return space_.size(); }

  const Payoffs& utility(int player) const;
  const Payoffs& welfare() const { return *welfare_; }
  /// Shared handle, exposed so callers can confirm two games use the same W.
  const std::shared_ptr<const Payoffs>& welfare_handle() const { return welfare_; }
  bool normalized() const { return normalized_; }
  const Labels& labels() const { return labels_; }

  /// Same players, actions, welfare and labels with new decision utilities.
  Game with_utilities(std::vector<Payoffs> utilities) const;

  /// "(A,A,left)" using action labels when present, action indices otherwise.
  std::string describe(ProfileIndex index) const;

 private:
  Game() = default;
  void check_utilities() const;

  ProfileSpace space_;
  std::vector<std::shared_ptr<const Payoffs>> utilities_;
  std::shared_ptr<const Payoffs> welfare_;
  bool normalized_ = false;
  Labels labels_;
};

/// Profiles of a fiber: `index` with `player`'s action ranging over A_player.
std::vector<ProfileIndex> fiber(const ProfileSpace& space, ProfileIndex index, int player);

/// argmax over a_i of U_i(a_i, others). `others` lists the actions of every
/// player except `player`, in player order.
std::vector<int> best_response_set(const Game& game, int player, std::span<const int> others);

/// Best responses of `player` to the other coordinates of `profile`.
std::vector<int> best_responses_at(const Game& game, int player, ProfileIndex profile);

bool is_best_response(const Game& game, int player, ProfileIndex profile);

ProfileSet pure_nash_equilibria(const Game& game);

/// Smallest eps such that `other` is eps-inconsequential to `player`.
Rational inconsequentiality(const Game& game, int player, int other);

struct PotentialCheck {
  bool holds = false;
  Rational max_violation;
};

/// Checks that every unilateral utility difference equals the welfare difference.
PotentialCheck verify_potential(const Game& game);

bool is_identical_interest(const Game& game);

/// All profiles maximizing welfare.
ProfileSet welfare_maximizers(const Game& game);

}  // namespace proxygames
