// One PASS/FAIL line per acceptance criterion. Exit status is the number of failures.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "proxygames/analysis.hpp"
#include "proxygames/dynamics.hpp"
#include "proxygames/constructions.hpp"

using namespace proxygames;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) note << "first failure: " << what << "; ";
    ok = ok && condition;
  }
};

ProfileIndex at(const Game& g, std::vector<int> p) { return g.space().index(p); }
Rational welfare(const Game& g, ProfileIndex a) { return g.welfare()(static_cast<Eigen::Index>(a)); }

std::vector<int> small_shape(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dim(2, 3);
  return {dim(rng), dim(rng), dim(rng)};
}

void intro(Outcome& out) {
  const Rational delta(1, 10);
  Game g = intro_game(delta);
  const ProfileSet good{at(g, {0, 0, 0})}, bad{at(g, {1, 1, 1})};
  out.require(pure_nash_equilibria(g) == good, "nominal PNE");
  for (const auto& f : builtin_evaluators()) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    out.require(pure_nash_equilibria(r.game()) == bad, f.name() + " reduced PNE");
    out.require(abr_classes(r.game()).states() == bad, f.name() + " reduced ABR");
    auto q = quality_minus(g, r, Concept::ABR).q_minus;
    out.require(*q == 5 * delta / (3 - delta) && *q == Rational(10, 58), f.name() + " Q-_ABR");
  }
  out.note << "Q-_ABR = 5/29 for sum, max, min, mean";
}

void pgbad(Outcome& out) {
  for (Rational eps : {Rational(1, 10), Rational(1, 20)}) {
    Game g = staggered_potential_game(eps);
    const int m = staggered_levels(eps);
    out.require(m == (eps == Rational(1, 10) ? 2 : 12), "level count");
    out.require(pure_nash_equilibria(g) == ProfileSet{0} && welfare(g, 0) == 1, "nominal unique PNE (0,0,0), W = 1");
    out.require(inconsequentiality(g, 0, 1) == 6 * eps, "inconsequentiality 6eps");
    const ProfileSet trap{at(g, {m + 1, 0, m})};
    for (const auto& f : builtin_evaluators()) {
      Game r = reduce_game(g, 0, 1, f).game();
      out.require(is_weakly_acyclic(r).holds, f.name() + " weakly acyclic");
      out.require(pure_nash_equilibria(r) == trap, f.name() + " reduced PNE");
      out.require(welfare(g, trap[0]) == 1 - 2 * eps - m * eps && welfare(g, trap[0]) == 6 * eps, "trap welfare 6eps");
    }
    out.note << "eps=" << to_string(eps) << ": |A|=" << g.size() << ", W(trap)=" << to_string(welfare(g, trap[0])) << "; ";
  }
}

void sspg(Outcome& out) {
  for (Rational eps : {Rational(1, 10), Rational(1, 20)}) {
    Game g = staggered_potential_game(eps);
    const int m = staggered_levels(eps);
    out.require(stochastically_stable_exact(g) == ProfileSet{0}, "nominal SS");
    for (const auto& f : builtin_evaluators()) {
      out.require(stochastically_stable_exact(reduce_game(g, 0, 1, f).game()) == ProfileSet{at(g, {m + 1, 0, m})},
                  f.name() + " reduced SS");
    }
  }
  out.note << "SS(G) = {(0,0,0)}, SS(G_f) = {(M+1,0,M)} for M = 2, 12";
}

void potential_suite(Outcome& out) {
  double least_mass = 1;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    // Welfare on a 1/10 grid so that beta = 100 separates the maximizers.
    Game g = random_potential_game({small_shape(seed), Rational(1, 5), seed, 10});
    ProfileSet best = welfare_maximizers(g);
    ProfileSet ss = stochastically_stable_exact(g);
    ProfileSet abr = abr_classes(g).states();
    out.require(g.size() <= 27, "size");
    out.require(ss == best, "SS = argmax W, seed " + std::to_string(seed));
    out.require(std::includes(abr.begin(), abr.end(), ss.begin(), ss.end()), "SS within ABR");
    SweepResult sweep = stochastically_stable_sweep(g, {1, 10, 30, 100}, 0.5);
    out.require(sweep.states == best, "sweep agrees with argmax W");
    Eigen::VectorXd pi = stationary_distribution(lll_transition_matrix(g, 100));
    double mass = 0;
    for (auto a : best) mass += pi(static_cast<Eigen::Index>(a));
    least_mass = std::min(least_mass, mass);
    out.require(mass >= 0.99, "beta-sweep mass on argmax W");
  }
  out.note << "least mass on argmax W at beta=100: " << least_mass;
}

void identical_pne(Outcome& out) {
  int violations = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Game g = random_identical_interest_game({small_shape(seed), Rational(1, 2), seed});
    ProfileSet nominal = pure_nash_equilibria(g);
    ProfileSet reduced = pure_nash_equilibria(reduce_game(g, 0, 1, Evaluator::max()).game());
    for (auto a : welfare_maximizers(g)) violations += !std::binary_search(reduced.begin(), reduced.end(), a);
    violations += !std::includes(nominal.begin(), nominal.end(), reduced.begin(), reduced.end());
  }
  out.require(violations == 0, "violations");
  out.note << violations << " violations in 200 games";
}

void block_ss(Outcome& out) {
  BlockGame b = block_identical_interest_game(Rational(1, 4));
  out.require(b.m == 1, "M = 1");
  for (const auto& c : validate_block_game(b)) out.require(c.holds, "validator " + c.property);
  const Game& g = b.game;
  ProfileSet nominal = stochastically_stable_exact(g);
  out.require(nominal == ProfileSet{at(g, {0, 0, 0}), at(g, {1, 1, 0})}, "nominal SS");
  for (auto a : nominal) out.require(welfare(g, a) == 1, "nominal SS welfare 1");
  ProfileSet trap{b.dagger[1][0], b.dagger[1][1]};
  std::sort(trap.begin(), trap.end());
  for (const auto& f : builtin_evaluators()) {
    ProfileSet ss = stochastically_stable_exact(reduce_game(g, 0, 1, f).game());
    out.require(!ss.empty() && std::includes(trap.begin(), trap.end(), ss.begin(), ss.end()), f.name() + " SS in trap");
    for (auto a : ss) out.require(welfare(g, a) <= Rational(1, 2), f.name() + " welfare <= 2eps");
  }
  out.note << "validator (a)-(g) passes; SS(G_f) inside A-dagger_1";
}

void universal_hiding(Outcome& out) {
  Rational worst = 1;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Game g = random_identical_interest_game({small_shape(seed), Rational(1, 5), seed});
    out.require(inconsequentiality(g, 0, 1) <= Rational(1, 5) && inconsequentiality(g, 2, 1) <= Rational(1, 5), "eps");
    for (auto a : stochastically_stable_exact(reduce_game_all(g, 1, Evaluator::max()).game())) {
      worst = std::min(worst, welfare(g, a));
      out.require(welfare(g, a) >= Rational(4, 5), "SS welfare >= 0.8");
    }
  }
  TheoremVerdict tight = check_universal_hiding_tightness(Rational(1, 10));
  out.require(tight.measured == Rational(4, 5) && tight.bound == Rational(4, 5), "tightness W = 1 - eps");
  out.note << "least SS welfare " << to_string(worst) << "; block witness W = " << to_string(tight.measured);
}

void candogan(Outcome& out) {
  const Rational eps(1, 200);
  const Rational bound = 1 - 8 * eps * 11;
  out.require(bound == Rational(56, 100), "bound 0.56");
  Rational worst = 1, worst_mpd = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Game g = random_potential_game({three_player_shape(12), eps, seed});
    for (const char* name : {"max", "min", "mean"}) {
      Game r = reduce_game(g, 0, 1, Evaluator::by_name(name)).game();
      Rational d = max_pairwise_difference(g, r);
      worst_mpd = std::max(worst_mpd, d);
      out.require(d <= Rational(1, 100), "MPD <= 0.01");
      for (auto a : stochastically_stable_exact(r)) {
        worst = std::min(worst, welfare(g, a));
        out.require(welfare(g, a) >= bound, "SS welfare >= 0.56");
      }
    }
  }
  out.note << "largest MPD " << to_string(worst_mpd) << ", least SS welfare " << to_string(worst);
}

void coarse(Outcome& out) {
  int games = 0;
  for (std::uint64_t seed = 0; games < 50; ++seed) {
    Game g = random_potential_game({small_shape(seed), Rational(1, 2), seed});
    if (pure_nash_equilibria(g).size() != 1) continue;
    ++games;
    CertificateVerdict c = coarse_alignment_certificate(g, reduced_potential(g, 1), 1, 0);
    out.require(c.premise_holds, "premise");
    out.require(c.conclusion_holds, "weakly acyclic with unique PNE a*");
  }
  out.note << games << " games with a unique PNE";
}

void zero_eps(Outcome& out) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Game g = random_potential_game({small_shape(seed), Rational(0), seed});
    out.require(inconsequentiality(g, 0, 1) == 0, "0-inconsequential");
    auto nominal = abr_classes(g).classes;
    for (const auto& f : builtin_evaluators()) {
      out.require(abr_classes(reduce_game(g, 0, 1, f).game()).classes == nominal, f.name() + " ABR equal");
    }
  }
  out.note << "ABR(G) = ABR(G_f) for 50 games x 4 evaluators";
}

void axioms(Outcome& out) {
  for (const auto& f : builtin_evaluators()) {
    AcceptabilityReport r = check_acceptability(f, 10000, 42);
    out.require(r.trials == 10000 && r.acceptable(), f.name() + " axioms");
    auto unbounded = check_boundedness(f, 10000, 43);
    out.require(f.bounded() == unbounded.empty(), f.name() + " boundedness");
    if (f.kind() == EvaluatorKind::Sum) {
      std::vector<Rational> witness{1, 1};
      out.require(f(witness) == 2, "sum witness");
    }
  }
  out.note << "0 violations; sum([1,1]) = 2 escapes [1,1]";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "intro pathology", 1, intro},
      {2, "staggered potential game under ABR", 10, pgbad},
      {3, "staggered potential game under SS", 60, sspg},
      {4, "potential-game SS property suite", 300, potential_suite},
      {5, "identical-interest PNE inclusion", 120, identical_pne},
      {6, "block identical-interest game under SS", 30, block_ss},
      {7, "universal hiding with max", 300, universal_hiding},
      {8, "size bound for bounded evaluators", 300, candogan},
      {9, "coarse potential alignment", 120, coarse},
      {10, "zero inconsequentiality", 60, zero_eps},
      {11, "evaluator axioms", 10, axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.require(seconds < c.limit_seconds, "time limit");
    failures += !out.ok;
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << seconds << " s, limit "
              << c.limit_seconds << " s) " << out.note.str() << std::endl;
  }
  return failures;
}
