#include "proxygames/analysis.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "proxygames/dynamics.hpp"

namespace proxygames {

std::string_view to_string(Concept c) {
  switch (c) {
    case Concept::PNE: return "pne";
    case Concept::ABR: return "abr";
    case Concept::SS: return "ss";
  }
  return "?";
}

Concept parse_concept(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "pne") return Concept::PNE;
  if (lower == "abr") return Concept::ABR;
  if (lower == "ss") return Concept::SS;
  throw std::invalid_argument("unknown equilibrium concept \"" + std::string(text) + "\" (expected pne, abr or ss)");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotApplicable: return "N/A";
  }
  return "?";
}

ProfileSet equilibrium_states(const Game& game, Concept c) {
  switch (c) {
    case Concept::PNE: return pure_nash_equilibria(game);
    case Concept::ABR: return abr_classes(game).states();
    case Concept::SS: return stochastically_stable_exact(game);
  }
  throw std::logic_error("unreachable concept");
}

namespace {

std::pair<Rational, Rational> welfare_range(const Payoffs& w, const ProfileSet& states) {
  Rational lo = w(static_cast<Eigen::Index>(states.front())), hi = lo;
  for (ProfileIndex a : states) {
    lo = std::min(lo, w(static_cast<Eigen::Index>(a)));
    hi = std::max(hi, w(static_cast<Eigen::Index>(a)));
  }
  return {lo, hi};
}

std::string describe_set(const Game& g, const ProfileSet& states) {
  std::string out = "{";
  for (std::size_t i = 0; i < states.size(); ++i) out += (i ? "," : "") + g.describe(states[i]);
  return out + "}";
}

ProfileIndex profile_at(const Game& g, std::initializer_list<int> actions) {
  std::vector<int> p(actions);
  return g.space().index(p);
}

TheoremVerdict not_applicable(std::string theorem, std::string instance, std::string reason) {
  TheoremVerdict v;
  v.theorem = std::move(theorem);
  v.instance = std::move(instance);
  v.verdict = Verdict::NotApplicable;
  v.detail = std::move(reason);
  return v;
}

Verdict verdict_of(bool ok) { return ok ? Verdict::Pass : Verdict::Fail; }

}  // namespace

QualityReport quality_report(const Game& nominal, const ReducedGame& reduced, Concept c) {
  if (reduced.game().welfare_handle() != nominal.welfare_handle() && reduced.game().welfare() != nominal.welfare()) {
    throw std::invalid_argument("reduced game does not share the nominal welfare");
  }
  QualityReport report;
  report.solution = c;
  report.nominal_states = equilibrium_states(nominal, c);
  report.reduced_states = equilibrium_states(reduced.game(), c);
  if (report.nominal_states.empty() || report.reduced_states.empty()) {
    throw std::domain_error(std::string("empty ") + std::string(to_string(c)) + " set; quality is undefined");
  }
  const Payoffs& w = nominal.welfare();
  std::tie(report.nominal_welfare_min, report.nominal_welfare_max) = welfare_range(w, report.nominal_states);
  std::tie(report.reduced_welfare_min, report.reduced_welfare_max) = welfare_range(w, report.reduced_states);
  if (report.nominal_welfare_min != 0) report.q_minus = report.reduced_welfare_max / report.nominal_welfare_min;
  if (report.nominal_welfare_max != 0) report.q_plus = report.reduced_welfare_min / report.nominal_welfare_max;
  return report;
}

QualityReport quality_minus(const Game& nominal, const ReducedGame& reduced, Concept c) {
  QualityReport report = quality_report(nominal, reduced, c);
  if (!report.q_minus) throw std::domain_error("nominal minimum welfare is zero; Q- is undefined");
  return report;
}

QualityReport quality_plus(const Game& nominal, const ReducedGame& reduced, Concept c) {
  QualityReport report = quality_report(nominal, reduced, c);
  if (!report.q_plus) throw std::domain_error("nominal maximum welfare is zero; Q+ is undefined");
  return report;
}

Rational max_pairwise_difference(const Game& first, const Game& second) {
  if (first.action_counts() != second.action_counts()) {
    throw std::invalid_argument("pairwise difference needs games with identical action spaces");
  }
  const ProfileSpace& space = first.space();
  Rational d = 0;
  for (int i = 0; i < first.players(); ++i) {
    // |dU - dU'| over a fiber is the spread of U - U' along it.
    Payoffs gap = first.utility(i) - second.utility(i);
    for (ProfileIndex a = 0; a < first.size(); ++a) {
      if (space.action(a, i) != 0) continue;
      Rational lo = gap(static_cast<Eigen::Index>(a)), hi = lo;
      for (ProfileIndex q : fiber(space, a, i)) {
        lo = std::min(lo, gap(static_cast<Eigen::Index>(q)));
        hi = std::max(hi, gap(static_cast<Eigen::Index>(q)));
      }
      d = std::max(d, Rational(hi - lo));
    }
  }
  return d;
}

Rational hiding_level(const Game& game, const ReducedGame& reduced) {
  Rational eps = 0;
  for (int observer : reduced.observers()) eps = std::max(eps, inconsequentiality(game, observer, reduced.hidden()));
  return eps;
}

TheoremVerdict candogan_bound_check(const Game& game, const ReducedGame& reduced) {
  TheoremVerdict v;
  v.theorem = "thm-candogan";
  v.instance = "evaluator=" + reduced.evaluator().name() + ", |A|=" + std::to_string(game.size());
  v.claim = "MPD(G,G_f) <= 2eps and min SS(G_f) welfare >= max{0, 1 - 8eps(|A|-1)}";
  if (!reduced.evaluator().bounded()) {
    throw std::invalid_argument("the size bound needs a bounded evaluator; " + reduced.evaluator().name() + " is not");
  }
  if (!verify_potential(game).holds || !game.normalized()) {
    return not_applicable(v.theorem, v.instance, "game is not a normalized potential game");
  }
  const Rational eps = hiding_level(game, reduced);
  const Rational d = max_pairwise_difference(game, reduced.game());
  const Rational states(static_cast<long>(game.size()) - 1);
  v.bound = std::max(Rational(0), Rational(1 - 8 * eps * states));

  ProfileSet ss = stochastically_stable_exact(reduced.game());
  auto [lo, hi] = welfare_range(game.welfare(), ss);
  v.measured = lo;
  v.witnesses = ss;
  const bool mpd_ok = d <= 2 * eps;
  v.verdict = verdict_of(mpd_ok && lo >= v.bound);
  v.detail = "eps=" + to_string(eps) + " MPD=" + to_string(d) + (mpd_ok ? "" : " exceeds 2eps") +
             " closeness bound " + to_string(Rational(game.welfare().maxCoeff() - 4 * d * states));
  if (v.bound == 0) v.detail += "; bound is vacuous, the theorem imposes no constraint";
  return v;
}

CertificateVerdict coarse_alignment_certificate(const Game& game, const Payoffs& proxy, int hidden, int observer) {
  if (game.players() < 3) throw std::invalid_argument("coarse alignment needs at least three players");
  if (observer == hidden) throw std::invalid_argument("observer and hidden player must differ");
  if (static_cast<std::size_t>(proxy.size()) != game.size()) throw std::invalid_argument("proxy tensor has the wrong size");
  ProfileSet equilibria = pure_nash_equilibria(game);
  if (equilibria.size() != 1) {
    throw std::invalid_argument("coarse alignment needs a unique pure Nash equilibrium, found " +
                                std::to_string(equilibria.size()));
  }
  const ProfileSpace& space = game.space();
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    if (proxy(static_cast<Eigen::Index>(a)) != proxy(static_cast<Eigen::Index>(space.fiber_base(a, hidden)))) {
      throw std::invalid_argument("proxy depends on the hidden player's action");
    }
  }
  const Payoffs reduced_w = reduced_potential(game, hidden);

  CertificateVerdict out;
  out.verdict.theorem = "prop-coarse";
  out.verdict.instance = "|A|=" + std::to_string(game.size());
  out.verdict.claim = "argmax proxy subset of argmax reduced potential => weakly acyclic with unique PNE a*";

  auto argmax_along = [&](const Payoffs& t, ProfileIndex context) {
    std::vector<int> best;
    Rational top = t(static_cast<Eigen::Index>(context));
    for (ProfileIndex q : fiber(space, context, observer)) top = std::max(top, t(static_cast<Eigen::Index>(q)));
    for (int k = 0; k < space.count(observer); ++k) {
      if (t(static_cast<Eigen::Index>(space.with_action(context, observer, k))) == top) best.push_back(k);
    }
    return best;
  };
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    if (space.action(a, observer) != 0 || space.action(a, hidden) != 0) continue;
    auto proxy_best = argmax_along(proxy, a);
    auto potential_best = argmax_along(reduced_w, a);
    if (!std::includes(potential_best.begin(), potential_best.end(), proxy_best.begin(), proxy_best.end())) {
      out.failing_contexts.push_back(a);
    }
  }
  out.premise_holds = out.failing_contexts.empty();

  std::vector<Payoffs> utilities;
  for (int i = 0; i < game.players(); ++i) utilities.push_back(i == observer ? proxy : game.utility(i));
  Game proxy_game = game.with_utilities(std::move(utilities));
  ProfileSet reduced_equilibria = pure_nash_equilibria(proxy_game);
  out.conclusion_holds = reduced_equilibria == equilibria && is_weakly_acyclic(proxy_game).holds;

  out.verdict.witnesses = reduced_equilibria;
  out.verdict.measured = Rational(static_cast<long>(out.failing_contexts.size()));
  out.verdict.bound = 0;
  out.verdict.verdict = verdict_of(!out.premise_holds || out.conclusion_holds);
  out.verdict.detail = std::string("premise ") + (out.premise_holds ? "holds" : "fails at " + std::to_string(out.failing_contexts.size()) + " contexts") +
                       ", conclusion " + (out.conclusion_holds ? "holds" : "fails") + ", reduced PNE " +
                       describe_set(game, reduced_equilibria);
  return out;
}

std::vector<TheoremVerdict> check_intro(const Rational& delta, const std::vector<Evaluator>& evaluators) {
  const Game g = intro_game(delta);
  const ProfileSet good = {profile_at(g, {0, 0, 0})};
  const ProfileSet bad = {profile_at(g, {1, 1, 1})};
  const bool nominal_ok = pure_nash_equilibria(g) == good;
  const Rational expected = 5 * delta / (3 - delta);
  std::vector<TheoremVerdict> out;
  for (const auto& f : evaluators) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    TheoremVerdict v;
    v.theorem = "intro";
    v.instance = "delta=" + to_string(delta) + ", evaluator=" + f.name();
    v.claim = "PNE(G)={(A,A,left)}, PNE(G_f)=ABR(G_f)={(B,B,right)}, Q-_ABR = 5delta/(3-delta)";
    v.bound = expected;
    ProfileSet reduced_pne = pure_nash_equilibria(r.game());
    ProfileSet reduced_abr = abr_classes(r.game()).states();
    QualityReport q = quality_report(g, r, Concept::ABR);
    v.measured = q.q_minus.value_or(Rational(-1));
    v.witnesses = reduced_abr;
    v.verdict = verdict_of(nominal_ok && reduced_pne == bad && reduced_abr == bad && q.q_minus && *q.q_minus == expected);
    v.detail = "reduced PNE " + describe_set(g, reduced_pne) + ", reduced ABR " + describe_set(g, reduced_abr);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TheoremVerdict> check_all_games_bad(const Rational& eps, const std::vector<Evaluator>& evaluators) {
  if (eps <= 0) throw std::invalid_argument("prop-bad needs eps > 0");
  const Rational delta = 3 * eps / (5 + eps) / 2;
  const Game g = intro_game(delta);
  std::vector<TheoremVerdict> out;
  for (const auto& f : evaluators) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    QualityReport q = quality_minus(g, r, Concept::ABR);
    TheoremVerdict v;
    v.theorem = "prop-bad";
    v.instance = "eps=" + to_string(eps) + ", delta=" + to_string(delta) + ", evaluator=" + f.name();
    v.claim = "Q-_ABR <= eps";
    v.bound = eps;
    v.measured = *q.q_minus;
    v.witnesses = q.reduced_states;
    v.verdict = verdict_of(*q.q_minus <= eps);
    out.push_back(std::move(v));
  }
  return out;
}

namespace {

struct StaggeredSetup {
  Game game;
  int m;
  Rational incons;
  bool preconditions;
  std::string detail;
};

StaggeredSetup staggered_setup(const Rational& eps) {
  Game g = staggered_potential_game(eps);
  int m = staggered_levels(eps);
  Rational incons = inconsequentiality(g, 0, 1);
  bool potential = verify_potential(g).holds;
  std::string detail = std::string("potential=") + (potential ? "yes" : "no") + ", inconsequentiality=" + to_string(incons);
  return {g, m, incons, potential && incons == 6 * eps, detail};
}

}  // namespace

std::vector<TheoremVerdict> check_potential_abr(const Rational& eps, const std::vector<Evaluator>& evaluators) {
  StaggeredSetup s = staggered_setup(eps);
  const Game& g = s.game;
  const ProfileSet nominal = {profile_at(g, {0, 0, 0})};
  const ProfileSet trap = {profile_at(g, {s.m + 1, 0, s.m})};
  const Rational trap_welfare = 1 - 2 * eps - s.m * eps;
  const bool nominal_ok = pure_nash_equilibria(g) == nominal && g.welfare()(static_cast<Eigen::Index>(nominal[0])) == 1;
  std::vector<TheoremVerdict> out;
  for (const auto& f : evaluators) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    TheoremVerdict v;
    v.theorem = "thm-pgbad";
    v.instance = "eps=" + to_string(eps) + ", M=" + std::to_string(s.m) + ", evaluator=" + f.name();
    v.claim = "G_f weakly acyclic with unique PNE (M+1,0,M), W = 1-2eps-M*eps, Q-_ABR <= inconsequentiality (6eps)";
    v.bound = s.incons;
    ProfileSet reduced_pne = pure_nash_equilibria(r.game());
    bool acyclic = is_weakly_acyclic(r.game()).holds;
    QualityReport q = quality_minus(g, r, Concept::ABR);
    v.measured = *q.q_minus;
    v.witnesses = reduced_pne;
    bool ok = s.preconditions && nominal_ok && acyclic && reduced_pne == trap && q.reduced_states == trap &&
              g.welfare()(static_cast<Eigen::Index>(trap[0])) == trap_welfare && *q.q_minus <= s.incons;
    v.verdict = verdict_of(ok);
    v.detail = s.detail + ", reduced PNE " + describe_set(g, reduced_pne) + ", weakly acyclic=" + (acyclic ? "yes" : "no");
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<TheoremVerdict> check_potential_ss(const Rational& eps, const std::vector<Evaluator>& evaluators) {
  StaggeredSetup s = staggered_setup(eps);
  const Game& g = s.game;
  const ProfileSet nominal = {profile_at(g, {0, 0, 0})};
  const ProfileSet trap = {profile_at(g, {s.m + 1, 0, s.m})};
  const ProfileSet nominal_ss = stochastically_stable_exact(g);
  std::vector<TheoremVerdict> out;
  for (const auto& f : evaluators) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    TheoremVerdict v;
    v.theorem = "thm-sspg";
    v.instance = "eps=" + to_string(eps) + ", M=" + std::to_string(s.m) + ", evaluator=" + f.name();
    v.claim = "SS(G)={(0,0,0)}, SS(G_f)={(M+1,0,M)}, Q-_SS <= inconsequentiality (6eps)";
    v.bound = s.incons;
    ProfileSet reduced_ss = stochastically_stable_exact(r.game());
    Rational nominal_min = g.welfare()(static_cast<Eigen::Index>(nominal_ss.front()));
    for (ProfileIndex a : nominal_ss) nominal_min = std::min(nominal_min, g.welfare()(static_cast<Eigen::Index>(a)));
    Rational reduced_max = welfare_range(g.welfare(), reduced_ss).second;
    v.measured = reduced_max / nominal_min;
    v.witnesses = reduced_ss;
    v.verdict = verdict_of(s.preconditions && nominal_ss == nominal && reduced_ss == trap && v.measured <= s.incons);
    v.detail = s.detail + ", SS(G) " + describe_set(g, nominal_ss) + ", SS(G_f) " + describe_set(g, reduced_ss);
    out.push_back(std::move(v));
  }
  return out;
}

TheoremVerdict check_identical_interest_pne(const Game& game, int observer, int hidden) {
  TheoremVerdict v;
  v.theorem = "prop-ii";
  v.instance = "|A|=" + std::to_string(game.size());
  v.claim = "argmax W subset of PNE(G_max) and PNE(G_max) subset of PNE(G)";
  if (!is_identical_interest(game)) return not_applicable(v.theorem, v.instance, "game is not identical-interest");
  ReducedGame r = reduce_game(game, observer, hidden, Evaluator::max());
  ProfileSet nominal = pure_nash_equilibria(game);
  ProfileSet reduced = pure_nash_equilibria(r.game());
  ProfileSet best = welfare_maximizers(game);
  long violations = 0;
  for (ProfileIndex a : best) {
    if (!std::binary_search(reduced.begin(), reduced.end(), a)) {
      ++violations;
      v.witnesses.push_back(a);
    }
  }
  for (ProfileIndex a : reduced) {
    if (!std::binary_search(nominal.begin(), nominal.end(), a)) {
      ++violations;
      v.witnesses.push_back(a);
    }
  }
  v.bound = 0;
  v.measured = violations;
  v.verdict = verdict_of(violations == 0);
  v.detail = "PNE(G) " + describe_set(game, nominal) + ", PNE(G_max) " + describe_set(game, reduced);
  return v;
}

std::vector<TheoremVerdict> check_identical_interest_ss(const Rational& eps, const std::vector<Evaluator>& evaluators) {
  BlockGame block = block_identical_interest_game(eps);
  const Game& g = block.game;
  bool validated = true;
  for (const auto& c : validate_block_game(block)) validated = validated && c.holds;
  const Rational incons = inconsequentiality(g, 0, 1);
  const ProfileSet expected_nominal = {profile_at(g, {0, 0, 0}), profile_at(g, {1, 1, 0})};
  const ProfileSet nominal_ss = stochastically_stable_exact(g);
  ProfileSet trap = {block.dagger[block.m][0], block.dagger[block.m][1]};
  std::sort(trap.begin(), trap.end());

  std::vector<TheoremVerdict> out;
  for (const auto& f : evaluators) {
    ReducedGame r = reduce_game(g, 0, 1, f);
    TheoremVerdict v;
    v.theorem = "thm-ss";
    v.instance = "eps=" + to_string(eps) + ", M=" + std::to_string(block.m) + ", evaluator=" + f.name();
    v.claim = "SS(G)={(0,0,0),(1,1,0)}, SS(G_f) within the final trap, W <= 2eps = inconsequentiality";
    v.bound = incons;
    ProfileSet reduced_ss = stochastically_stable_exact(r.game());
    v.measured = welfare_range(g.welfare(), reduced_ss).second;
    v.witnesses = reduced_ss;
    bool inside = std::includes(trap.begin(), trap.end(), reduced_ss.begin(), reduced_ss.end());
    v.verdict = verdict_of(validated && incons == 2 * eps && nominal_ss == expected_nominal && inside &&
                           v.measured <= 2 * eps);
    v.detail = std::string("validator ") + (validated ? "passes" : "fails") + ", SS(G) " + describe_set(g, nominal_ss) +
               ", SS(G_f) " + describe_set(g, reduced_ss);
    out.push_back(std::move(v));
  }
  return out;
}

TheoremVerdict check_universal_hiding(const Game& game, int hidden) {
  TheoremVerdict v;
  v.theorem = "thm-all";
  v.instance = "|A|=" + std::to_string(game.size());
  v.claim = "every player except the hidden one applies max: Q+_SS >= 1 - eps";
  if (!is_identical_interest(game) || !game.normalized()) {
    return not_applicable(v.theorem, v.instance, "game is not a normalized identical-interest game");
  }
  ReducedGame r = reduce_game_all(game, hidden, Evaluator::max());
  const Rational eps = hiding_level(game, r);
  QualityReport q = quality_plus(game, r, Concept::SS);
  v.bound = 1 - eps;
  v.measured = *q.q_plus;
  v.witnesses = q.reduced_states;
  v.verdict = verdict_of(*q.q_plus >= v.bound && q.reduced_welfare_min >= 1 - eps);
  v.detail = "eps=" + to_string(eps) + ", min SS(G_f) welfare " + to_string(q.reduced_welfare_min);
  return v;
}

TheoremVerdict check_universal_hiding_tightness(const Rational& eps) {
  BlockGame block = block_identical_interest_game(eps);
  const Game& g = block.game;
  const Rational incons = inconsequentiality(g, 0, 1);
  // Observers only see the reduced potential; its maximizers may pair with
  // any action of the hidden player.
  Payoffs reduced = collapse_along(g.welfare(), g.space(), 1, Evaluator::max());
  Rational top = reduced.maxCoeff();
  TheoremVerdict v;
  v.theorem = "thm-all";
  v.instance = "tightness, block game eps=" + to_string(eps);
  v.claim = "min welfare over reduced-potential maximizers equals 1 - inconsequentiality";
  v.bound = 1 - incons;
  Rational worst = 1;
  for (ProfileIndex a = 0; a < g.size(); ++a) {
    if (reduced(static_cast<Eigen::Index>(a)) != top) continue;
    if (g.welfare()(static_cast<Eigen::Index>(a)) < worst) {
      worst = g.welfare()(static_cast<Eigen::Index>(a));
      v.witnesses.assign(1, a);
    }
  }
  v.measured = worst;
  v.verdict = verdict_of(worst == v.bound);
  v.detail = "witness " + describe_set(g, v.witnesses);
  return v;
}

TheoremVerdict check_zero_inconsequential(const Game& game, const Evaluator& f, int observer, int hidden) {
  TheoremVerdict v;
  v.theorem = "eps-zero";
  v.instance = "|A|=" + std::to_string(game.size()) + ", evaluator=" + f.name();
  v.claim = "inconsequentiality 0 => ABR(G) = ABR(G_f)";
  Rational incons = inconsequentiality(game, observer, hidden);
  if (incons != 0) return not_applicable(v.theorem, v.instance, "hidden player is " + to_string(incons) + "-inconsequential");
  ReducedGame r = reduce_game(game, observer, hidden, f);
  auto nominal = abr_classes(game).classes;
  auto reduced = abr_classes(r.game()).classes;
  v.bound = 0;
  v.measured = nominal == reduced ? 0 : 1;
  v.verdict = verdict_of(nominal == reduced);
  v.detail = std::to_string(nominal.size()) + " nominal classes, " + std::to_string(reduced.size()) + " reduced classes";
  return v;
}

TheoremVerdict check_evaluator_axioms(const Evaluator& f, std::size_t trials, std::uint64_t seed) {
  AcceptabilityReport report = check_acceptability(f, trials, seed);
  auto unbounded = check_boundedness(f, trials, seed + 1);
  TheoremVerdict v;
  v.theorem = "axioms";
  v.instance = "evaluator=" + f.name() + ", trials=" + std::to_string(trials);
  v.claim = std::string("acceptable, and ") + (f.bounded() ? "bounded" : "unbounded on some witness");
  v.bound = 0;
  v.measured = static_cast<long>(report.axiom1_violations.size() + report.axiom2_violations.size());
  bool boundedness_ok = f.bounded() ? unbounded.empty() : !unbounded.empty();
  v.verdict = verdict_of(report.acceptable() && boundedness_ok);
  v.detail = std::to_string(report.axiom1_violations.size()) + " axiom-1 and " +
             std::to_string(report.axiom2_violations.size()) + " axiom-2 violations, " +
             std::to_string(unbounded.size()) + " lists outside [min,max]";
  if (!unbounded.empty()) {
    v.detail += ", e.g. [";
    for (std::size_t i = 0; i < unbounded.front().size(); ++i) v.detail += (i ? "," : "") + to_string(unbounded.front()[i]);
    v.detail += "] -> " + to_string(f(unbounded.front()));
  }
  return v;
}

std::vector<TheoremVerdict> theorem_suite(const Game& game, const std::vector<Evaluator>& evaluators,
                                          const SuiteOptions& options) {
  std::vector<TheoremVerdict> out;
  const std::string instance = "|A|=" + std::to_string(game.size());
  for (const char* id : {"intro", "prop-bad", "thm-pgbad", "thm-sspg", "thm-ss"}) {
    out.push_back(not_applicable(id, instance, "existence result witnessed by a fixed construction; run `reproduce " +
                                                   std::string(id) + "`"));
  }

  out.push_back(check_identical_interest_pne(game, options.observer, options.hidden));
  out.push_back(check_universal_hiding(game, options.hidden));

  const bool potential = verify_potential(game).holds;
  for (const auto& f : evaluators) {
    if (!f.bounded()) {
      out.push_back(not_applicable("thm-candogan", instance + ", evaluator=" + f.name(), "evaluator is not bounded"));
      continue;
    }
    out.push_back(candogan_bound_check(game, reduce_game(game, options.observer, options.hidden, f)));
  }

  const bool unique_pne = pure_nash_equilibria(game).size() == 1;
  if (potential && game.players() >= 3 && unique_pne) {
    CertificateVerdict c = coarse_alignment_certificate(game, reduced_potential(game, options.hidden), options.hidden,
                                                        options.observer);
    c.verdict.instance += ", proxy=reduced potential";
    out.push_back(c.verdict);
    for (const auto& f : evaluators) {
      ReducedGame r = reduce_game(game, options.observer, options.hidden, f);
      CertificateVerdict e = coarse_alignment_certificate(game, r.proxy(options.observer), options.hidden, options.observer);
      e.verdict.instance += ", proxy=" + f.name();
      out.push_back(e.verdict);
    }
  } else {
    out.push_back(not_applicable("prop-coarse", instance, "needs a potential game with n >= 3 and a unique PNE"));
  }

  for (const auto& f : evaluators) out.push_back(check_zero_inconsequential(game, f, options.observer, options.hidden));
  return out;
}

}  // namespace proxygames
