#include "proxygames/constructions.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "proxygames/dynamics.hpp"
#include "proxygames/evaluators.hpp"

namespace proxygames {

namespace {

using boost::multiprecision::mpz_int;

// Smallest integer >= x.
long ceil_of(const Rational& x) {
  mpz_int q = boost::multiprecision::numerator(x) / boost::multiprecision::denominator(x);
  if (Rational(q) < x) q += 1;
  return q.convert_to<long>();
}

Eigen::Index at(const ProfileSpace& space, std::initializer_list<int> profile) {
  std::vector<int> p(profile);
  return static_cast<Eigen::Index>(space.index(p));
}

}  // namespace

Game intro_game(const Rational& delta) {
  if (delta <= 0 || delta >= 3) throw std::invalid_argument("intro game needs delta in (0, 3)");
  const Rational& d = delta;
  ProfileSpace space({2, 2, 2});
  Payoffs u1(8), u23(8);
  // Index order (player 1, player 2, player 3); action 0 = A / left.
  u1(at(space, {0, 0, 0})) = 1 - d;     u23(at(space, {0, 0, 0})) = 1;
  u1(at(space, {0, 1, 0})) = 0;         u23(at(space, {0, 1, 0})) = 0;
  u1(at(space, {1, 0, 0})) = d;         u23(at(space, {1, 0, 0})) = 0;
  u1(at(space, {1, 1, 0})) = 1;         u23(at(space, {1, 1, 0})) = 0;
  u1(at(space, {0, 0, 1})) = 0;         u23(at(space, {0, 0, 1})) = 2 * d;
  u1(at(space, {0, 1, 1})) = 2 * d;     u23(at(space, {0, 1, 1})) = 0;
  u1(at(space, {1, 0, 1})) = 3 * d;     u23(at(space, {1, 0, 1})) = d;
  u1(at(space, {1, 1, 1})) = d;         u23(at(space, {1, 1, 1})) = 2 * d;

  Payoffs welfare = (u1 + 2 * u23) / Rational(3 - d);
  // Normalization holds only while (A,A,left) carries the largest sum.
  bool normalized = welfare.maxCoeff() == 1 && welfare.minCoeff() >= 0;
  Game::Labels labels = {{"A", "B"}, {"A", "B"}, {"left", "right"}};
  return Game({2, 2, 2}, {u1, u23, u23}, welfare, normalized, labels);
}

int staggered_levels(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 7)) throw std::invalid_argument("staggered game needs eps in (0, 1/7)");
  return static_cast<int>(ceil_of(1 / eps - 8));
}

Game staggered_potential_game(const Rational& eps) {
  const int m = staggered_levels(eps);
  const Rational& e = eps;
  ProfileSpace space({m + 2, 3, m + 1});
  Payoffs u1(static_cast<Eigen::Index>(space.size())), w(static_cast<Eigen::Index>(space.size()));

  for (ProfileIndex a = 0; a < space.size(); ++a) {
    const int row = space.action(a, 0), col = space.action(a, 1), level = space.action(a, 2);
    std::array<Rational, 3> u_row, w_row;
    if (level == 0) {
      if (row == 0) {
        u_row = {Rational(1), 1 - 3 * e, 1 - 6 * e};
        w_row = {Rational(1), 1 - 7 * e, 1 - 4 * e};
      } else if (row == 1) {
        u_row = {1 - 2 * e, 1 + e, 1 - 5 * e};
        w_row = {1 - 2 * e, 1 - 3 * e, 1 - 3 * e};
      } else {
        u_row = {Rational(0), 4 * e, -2 * e};
        w_row = {Rational(0), Rational(0), Rational(0)};
      }
    } else {
      const Rational k = level;
      const Rational ke = k * e;
      if (row == level - 1) {
        u_row = {1 + e / 2, 1 - Rational(5, 2) * e, 1 - Rational(11, 2) * e};
        w_row = {1 + e / 2 - ke, 1 - Rational(13, 2) * e - ke, 1 - Rational(7, 2) * e - ke};
      } else if (row == level) {
        u_row = {Rational(1), 1 - 3 * e, 1 - 6 * e};
        w_row = {1 - ke, 1 - 7 * e - ke, 1 - 4 * e - ke};
      } else if (row == level + 1) {
        u_row = {1 - 2 * e, 1 + e, 1 - 5 * e};
        w_row = {1 - 2 * e - ke, 1 - 3 * e - ke, 1 - 3 * e - ke};
      } else {
        // Every other row repeats row k+2.
        u_row = {ke, 4 * e + ke, -2 * e + ke};
        w_row = {Rational(0), Rational(0), Rational(0)};
      }
    }
    u1(static_cast<Eigen::Index>(a)) = u_row[col];
    w(static_cast<Eigen::Index>(a)) = w_row[col];
  }
  return Game({m + 2, 3, m + 1}, {u1, w, w}, w, true);
}

int block_count(const Rational& eps) {
  if (eps <= 0 || eps >= Rational(1, 3)) throw std::invalid_argument("block game needs eps in (0, 1/3)");
  return static_cast<int>(ceil_of(1 / eps - 3));
}

namespace {

BlockGame build_block_game(const Rational& eps) {
  const int m = block_count(eps);
  const Rational& e = eps;
  ProfileSpace space({2 * m + 3, 2, 2 * m + 2});
  Payoffs w = Payoffs::Zero(static_cast<Eigen::Index>(space.size()));

  for (int k = 0; k <= m; ++k) {
    const Rational ke = k * e;
    const Rational high = 1 - ke, low = 1 - ke - 2 * e;
    // Left matrix (Player 3 plays 2k): rows 2k and 2k+1 hold mirrored payoffs.
    w(at(space, {2 * k, 0, 2 * k})) = high;
    w(at(space, {2 * k, 1, 2 * k})) = low;
    w(at(space, {2 * k + 1, 0, 2 * k})) = low;
    w(at(space, {2 * k + 1, 1, 2 * k})) = high;
    // Right matrix (Player 3 plays 2k+1): row 2k+2 dominates row 2k+1.
    const Rational entry = 1 - ke - Rational(7, 4) * e;
    const Rational trap = 1 - ke - Rational(3, 2) * e;
    for (int col = 0; col < 2; ++col) {
      w(at(space, {2 * k + 1, col, 2 * k + 1})) = entry;
      w(at(space, {2 * k + 2, col, 2 * k + 1})) = trap;
    }
  }

  BlockGame block{Game({2 * m + 3, 2, 2 * m + 2}, {w, w, w}, w, true), eps, m, {}};
  for (int k = 0; k <= m; ++k) {
    block.dagger.push_back({static_cast<ProfileIndex>(at(space, {2 * k + 2, 0, 2 * k + 1})),
                            static_cast<ProfileIndex>(at(space, {2 * k + 2, 1, 2 * k + 1}))});
  }
  return block;
}

std::vector<Rational> sorted_column_pair(const Game& g, int row, int level) {
  const ProfileSpace& space = g.space();
  std::vector<Rational> values = {g.welfare()(at(space, {row, 0, level})), g.welfare()(at(space, {row, 1, level}))};
  std::sort(values.begin(), values.end());
  return values;
}

}  // namespace

std::vector<PropertyCheck> validate_block_game(const BlockGame& block) {
  const Game& g = block.game;
  const ProfileSpace& space = g.space();
  const Rational& e = block.eps;
  const int m = block.m;
  std::vector<PropertyCheck> checks;

  checks.push_back({"(a) identical interest", is_identical_interest(g), ""});

  Rational incons = inconsequentiality(g, 0, 1);
  checks.push_back({"(b) Player 2 is exactly 2eps-inconsequential to Player 1", incons == 2 * e,
                    "measured " + to_string(incons)});

  {
    bool ok = welfare_maximizers(g) == ProfileSet{static_cast<ProfileIndex>(at(space, {0, 0, 0})),
                                                  static_cast<ProfileIndex>(at(space, {1, 1, 0}))} &&
              g.welfare().maxCoeff() == 1;
    std::string detail;
    for (int k = 0; k <= m && ok; ++k) {
      Rational best = -1;
      ProfileSet argmax;
      for (ProfileIndex a = 0; a < g.size(); ++a) {
        int level = space.action(a, 2);
        if (level / 2 != k) continue;
        const Rational& v = g.welfare()(static_cast<Eigen::Index>(a));
        if (v > best) {
          best = v;
          argmax.assign(1, a);
        } else if (v == best) {
          argmax.push_back(a);
        }
      }
      ProfileSet expected = {static_cast<ProfileIndex>(at(space, {2 * k, 0, 2 * k})),
                             static_cast<ProfileIndex>(at(space, {2 * k + 1, 1, 2 * k}))};
      std::sort(expected.begin(), expected.end());
      if (argmax != expected || best != 1 - k * e) {
        ok = false;
        detail = "block " + std::to_string(k) + " maximizers differ";
      }
    }
    checks.push_back({"(c) block maximizers (2k,0,2k),(2k+1,1,2k) with W=1-k*eps; global {(0,0,0),(1,1,0)}",
                      ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= m; ++k) {
      std::vector<Rational> expected = {1 - (k + 2) * e, 1 - k * e};
      if (sorted_column_pair(g, 2 * k, 2 * k) != expected || sorted_column_pair(g, 2 * k + 1, 2 * k) != expected) {
        ok = false;
        detail = "block " + std::to_string(k);
      }
    }
    checks.push_back({"(d) rows 2k and 2k+1 carry equal sorted payoff lists at a3=2k", ok, detail});
  }

  {
    bool ok = true;
    std::string detail;
    for (int k = 0; k <= m; ++k) {
      auto upper = sorted_column_pair(g, 2 * k + 2, 2 * k + 1);
      auto lower = sorted_column_pair(g, 2 * k + 1, 2 * k + 1);
      for (std::size_t i = 0; i < upper.size(); ++i) {
        if (!(upper[i] > lower[i])) {
          ok = false;
          detail = "block " + std::to_string(k);
        }
      }
    }
    checks.push_back({"(e) at a3=2k+1 action 2k+2 strictly dominates 2k+1 for Player 1", ok, detail});
  }

  std::vector<ReducedGame> reductions;
  for (const auto& f : builtin_evaluators()) reductions.push_back(reduce_game(g, 0, 1, f));

  {
    bool ok = true;
    std::string detail;
    for (const auto& r : reductions) {
      auto successors = best_reply_graph(r.game());
      for (int k = 0; k <= m && ok; ++k) {
        ProfileSet trap = {block.dagger[k][0], block.dagger[k][1]};
        std::sort(trap.begin(), trap.end());
        auto reached = can_reach(successors, trap);
        for (ProfileIndex a = 0; a < g.size(); ++a) {
          if (space.action(a, 2) / 2 == k && !reached[a]) {
            ok = false;
            detail = r.evaluator().name() + ": " + g.describe(a) + " cannot reach the block-" + std::to_string(k) + " trap";
            break;
          }
        }
        bool escapes = false;
        for (ProfileIndex a : trap) {
          for (ProfileIndex b : successors[a]) {
            if (std::binary_search(trap.begin(), trap.end(), b)) continue;
            bool increments = k < m && b == space.with_action(a, 2, 2 * k + 2);
            if (!increments) {
              ok = false;
              detail = r.evaluator().name() + ": " + g.describe(a) + " -> " + g.describe(b) + " leaves the trap";
            }
            escapes = true;
          }
        }
        if (ok && escapes != (k < m)) {
          ok = false;
          detail = r.evaluator().name() + ": block " + std::to_string(k) +
                   (k < m ? " trap has no upward escape" : " final trap is not closed");
        }
      }
    }
    checks.push_back({"(f) every block-k state reaches the trap; the only escape is Player 3 moving to 2k+2", ok,
                      detail});
  }

  {
    bool ok = true;
    std::string detail;
    ProfileSet last = {block.dagger[m][0], block.dagger[m][1]};
    std::sort(last.begin(), last.end());
    for (const auto& r : reductions) {
      auto classes = abr_classes(r.game()).classes;
      if (classes.size() != 1 || classes.front() != last) {
        ok = false;
        detail = r.evaluator().name() + ": recurrent classes differ from the final trap";
      }
    }
    for (ProfileIndex a : last) {
      if (g.welfare()(static_cast<Eigen::Index>(a)) > 2 * e) {
        ok = false;
        detail = "final trap welfare exceeds 2eps";
      }
    }
    checks.push_back({"(g) reduced recurrent set is the final trap with W <= 2eps", ok, detail});
  }
  return checks;
}

BlockGame block_identical_interest_game(const Rational& eps) {
  BlockGame block = build_block_game(eps);
  for (const auto& check : validate_block_game(block)) {
    if (!check.holds) throw std::logic_error("block game construction failed " + check.property + ": " + check.detail);
  }
  return block;
}

namespace {

Payoffs random_welfare(const ProfileSpace& space, const Rational& eps, int spread_divisor, std::uint64_t seed,
                       int grid) {
  if (space.players() < 3) throw std::invalid_argument("random games need at least three players");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  if (grid <= 0) throw std::invalid_argument("grid must be positive");
  // Perturbation steps along Player 2's coordinate, capped so the spread stays <= eps.
  mpz_int cap = boost::multiprecision::numerator(eps * grid) /
                (boost::multiprecision::denominator(eps * grid) * spread_divisor);
  const int q = static_cast<int>(std::min<mpz_int>(cap, grid).convert_to<long>());

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> base_dist(0, grid - q), perturb_dist(0, q);
  std::uniform_int_distribution<std::size_t> pick(0, space.size() - 1);

  std::vector<int> base(space.size(), 0);
  for (ProfileIndex a = 0; a < space.size(); ++a) {
    if (space.action(a, 1) == 0) base[a] = base_dist(rng);
  }
  std::vector<int> perturbation(space.size());
  for (auto& p : perturbation) p = perturb_dist(rng);

  ProfileIndex top = pick(rng);
  base[space.fiber_base(top, 1)] = grid - q;
  perturbation[top] = q;

  Payoffs w(static_cast<Eigen::Index>(space.size()));
  for (ProfileIndex a = 0; a < space.size(); ++a) {
    w(static_cast<Eigen::Index>(a)) = Rational(base[space.fiber_base(a, 1)] + perturbation[a], grid);
  }
  return w;
}

}  // namespace

Game random_potential_game(const RandomGameParams& params) {
  ProfileSpace space(params.action_counts);
  // U_1's spread along a_2 is at most twice the perturbation range.
  Payoffs w = random_welfare(space, params.eps, 2, params.seed, params.grid);
  std::vector<Payoffs> utilities;
  for (int i = 0; i < space.players(); ++i) {
    Payoffs u(w.size());
    for (ProfileIndex a = 0; a < space.size(); ++a) {
      u(static_cast<Eigen::Index>(a)) = w(static_cast<Eigen::Index>(a)) -
                                        w(static_cast<Eigen::Index>(space.with_action(a, i, 0)));
    }
    utilities.push_back(std::move(u));
  }
  return Game(params.action_counts, std::move(utilities), std::move(w), true);
}

Game random_identical_interest_game(const RandomGameParams& params) {
  ProfileSpace space(params.action_counts);
  Payoffs w = random_welfare(space, params.eps, 1, params.seed, params.grid);
  std::vector<Payoffs> utilities(static_cast<std::size_t>(space.players()), w);
  return Game(params.action_counts, std::move(utilities), std::move(w), true);
}

std::vector<int> three_player_shape(int states) {
  std::vector<int> best;
  for (int x = 2; x <= states; ++x) {
    for (int y = 2; y <= states; ++y) {
      if (states % (x * y) != 0) continue;
      int z = states / (x * y);
      if (z < 2) continue;
      std::vector<int> shape = {x, y, z};
      auto spread = [](const std::vector<int>& s) { return *std::max_element(s.begin(), s.end()) - *std::min_element(s.begin(), s.end()); };
      if (best.empty() || spread(shape) < spread(best) || (spread(shape) == spread(best) && shape > best)) best = shape;
    }
  }
  if (best.empty()) throw std::invalid_argument("no three-player shape with " + std::to_string(states) + " profiles");
  return best;
}

}  // namespace proxygames
