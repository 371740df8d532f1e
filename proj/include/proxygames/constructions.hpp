#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "proxygames/game.hpp"

namespace proxygames {

/// Three players with two actions each; Players 2 and 3 share a utility.
/// Welfare is the utility sum divided by 3 - delta. Requires delta > 0.
Game intro_game(const Rational& delta);

/// Integer M with 1/eps - 8 <= M < 1/eps - 7. Requires eps in (0, 1/7).
int staggered_levels(const Rational& eps);

/// Staggered three-player potential game: Player 3's action selects a level,
/// Player 2 is 6 eps-inconsequential to Player 1, and any acceptable evaluator
/// applied by Player 1 to Player 2 climbs the levels to (M+1, 0, M).
Game staggered_potential_game(const Rational& eps);

/// Integer M with 1/eps - 3 <= M < 1/eps - 2. Requires eps in (0, 1/3).
int block_count(const Rational& eps);

/// Identical-interest game made of blocks k = 0..M. In block k Player 3 picks
/// between actions 2k and 2k+1; the trap sets dagger[k] =
/// {(2k+2,0,2k+1), (2k+2,1,2k+1)} drive best replies of the reduced game up
/// one block at a time.
struct BlockGame {
  Game game;
  Rational eps;
  int m = 0;
  std::vector<std::array<ProfileIndex, 2>> dagger;
};

/// Outcome of checking one structural property of the block game.
struct PropertyCheck {
  std::string property;
  bool holds = false;
  std::string detail;
};

/// Builds the block game and validates it; throws std::logic_error naming the
/// failed property if validation does not pass.
BlockGame block_identical_interest_game(const Rational& eps);

/// Property checks (a)-(g) of the block construction, in order.
std::vector<PropertyCheck> validate_block_game(const BlockGame& block);

struct RandomGameParams {
  std::vector<int> action_counts;
  /// Cap on Player 1's payoff spread along Player 2's action.
  Rational eps = 0;
  std::uint64_t seed = 0;
  /// Welfare values are multiples of 1/grid.
  int grid = 1000;
};

/// Potential game with welfare W = base(a_{-2}) + perturbation(a) and
/// marginal-contribution utilities U_i(a) = W(a) - W(0, a_{-i}). Player 2 is
/// at most eps-inconsequential to Player 1; max W = 1, min W >= 0.
Game random_potential_game(const RandomGameParams& params);

/// Identical-interest game (U_i = W) with the same welfare construction.
Game random_identical_interest_game(const RandomGameParams& params);

/// Shape with `states` profiles over three players, each with at least two
/// actions, as balanced as possible. Throws if none exists.
std::vector<int> three_player_shape(int states);

}  // namespace proxygames
