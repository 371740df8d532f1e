#pragma once

#include <random>
#include <vector>

#include "proxygames/game.hpp"

namespace testing {

using proxygames::Game;
using proxygames::Payoffs;
using proxygames::ProfileIndex;
using proxygames::Rational;

inline Rational R(const char* text) { return proxygames::parse_rational(text); }

inline Rational at(const Payoffs& t, ProfileIndex a) { return t(static_cast<Eigen::Index>(a)); }

// Unstructured game with small integer payoffs so ties are common. Welfare is
// an independent tensor, scaled so max W = 1.
inline Game random_game(std::vector<int> counts, std::uint64_t seed, int levels = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> value(0, levels - 1);
  std::size_t size = 1;
  for (int c : counts) size *= static_cast<std::size_t>(c);
  std::vector<Payoffs> utilities;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    Payoffs u(static_cast<Eigen::Index>(size));
    for (auto& x : u) x = value(rng);
    utilities.push_back(u);
  }
  Payoffs w(static_cast<Eigen::Index>(size));
  for (auto& x : w) x = value(rng);
  w(static_cast<Eigen::Index>(rng() % size)) = levels;
  w /= Rational(levels);
  return Game(counts, utilities, w);
}

inline std::vector<int> random_shape(std::mt19937_64& rng, int players = 3, int max_actions = 3) {
  std::uniform_int_distribution<int> dim(1, max_actions);
  std::vector<int> shape;
  for (int i = 0; i < players; ++i) shape.push_back(dim(rng));
  return shape;
}

}  // namespace testing
