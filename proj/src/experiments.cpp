#include "proxygames/experiments.hpp"

#include <cctype>
#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "proxygames/dynamics.hpp"
#include "proxygames/constructions.hpp"

namespace proxygames {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(std::string_view text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw std::invalid_argument("unknown format \"" + std::string(text) + "\" (expected json or csv)");
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PROXYGAMES_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(cap, &end, 10);
    if (end != cap && *end == '\0' && v >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(v));
  }
  return n;
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void validate_config(const RunConfig& config, const Game& game) {
  const int n = game.players();
  auto in_range = [n](int p) { return p >= 0 && p < n; };
  if (!in_range(config.hidden)) throw std::invalid_argument("hidden player out of range (game has " + std::to_string(n) + " players)");
  if (!config.all_observers) {
    if (!in_range(config.observer)) throw std::invalid_argument("observer out of range (game has " + std::to_string(n) + " players)");
    if (config.observer == config.hidden) throw std::invalid_argument("observer and hidden player must differ");
  }
  for (std::size_t k = 0; k < config.beta_schedule.size(); ++k) {
    if (!(config.beta_schedule[k] > 0)) throw std::invalid_argument("beta schedule entries must be positive");
    if (k > 0 && !(config.beta_schedule[k] > config.beta_schedule[k - 1])) {
      throw std::invalid_argument("beta schedule must be strictly increasing");
    }
  }
  if (!(config.sweep_threshold > 0 && config.sweep_threshold < 1)) throw std::invalid_argument("sweep threshold must be in (0, 1)");
}

namespace {

std::vector<Evaluator> evaluators_or_builtin(const RunConfig& config) {
  return config.evaluators.empty() ? builtin_evaluators() : config.evaluators;
}

ordered_json exact(const Rational& r) {
  return ordered_json{{"exact", to_string(r)}, {"decimal", to_double(r)}};
}

ordered_json profiles(const Game& g, const ProfileSet& states) {
  ordered_json arr = ordered_json::array();
  for (ProfileIndex a : states) arr.push_back(g.describe(a));
  return arr;
}

ordered_json classes_json(const Game& g, const RecurrentClassSet& set) {
  ordered_json arr = ordered_json::array();
  for (const auto& c : set.classes) arr.push_back(profiles(g, c));
  return arr;
}

ordered_json equilibria_json(const Game& g, const std::vector<double>& schedule, double threshold) {
  ordered_json out;
  out["pne"] = profiles(g, pure_nash_equilibria(g));
  out["abr_classes"] = classes_json(g, abr_classes(g));
  out["ss"] = profiles(g, stochastically_stable_exact(g));
  out["weakly_acyclic"] = is_weakly_acyclic(g).holds;
  if (!schedule.empty()) {
    SweepResult sweep = stochastically_stable_sweep(g, schedule, threshold);
    out["beta_sweep"] = {{"states", profiles(g, sweep.states)},
                         {"conclusive", sweep.conclusive},
                         {"selected_mass", sweep.selected_mass}};
  }
  return out;
}

ordered_json quality_json(const QualityReport& q) {
  ordered_json out;
  out["concept"] = std::string(to_string(q.solution));
  out["nominal_welfare"] = {{"min", exact(q.nominal_welfare_min)}, {"max", exact(q.nominal_welfare_max)}};
  out["reduced_welfare"] = {{"min", exact(q.reduced_welfare_min)}, {"max", exact(q.reduced_welfare_max)}};
  out["q_minus"] = q.q_minus ? exact(*q.q_minus) : ordered_json(nullptr);
  out["q_plus"] = q.q_plus ? exact(*q.q_plus) : ordered_json(nullptr);
  return out;
}

ordered_json verdict_json(const Game* g, const TheoremVerdict& v) {
  ordered_json out;
  out["theorem"] = v.theorem;
  out["instance"] = v.instance;
  out["verdict"] = std::string(to_string(v.verdict));
  if (v.verdict != Verdict::NotApplicable) {
    out["claim"] = v.claim;
    out["bound"] = exact(v.bound);
    out["measured"] = exact(v.measured);
    ordered_json w = ordered_json::array();
    for (ProfileIndex a : v.witnesses) {
      if (g) w.push_back(g->describe(a));
      else w.push_back(a);
    }
    out["witnesses"] = w;
  }
  out["detail"] = v.detail;
  return out;
}

struct ReducedSection {
  ordered_json json;
  std::vector<std::array<std::string, 5>> rows;
};

}  // namespace

AnalyzeResult cmd_analyze(const Game& game, const RunConfig& config) {
  validate_config(config, game);
  const auto evaluators = evaluators_or_builtin(config);
  const std::vector<Concept> concepts =
      config.concepts.empty() ? std::vector<Concept>{Concept::PNE, Concept::ABR, Concept::SS} : config.concepts;

  const PotentialCheck potential = verify_potential(game);
  const int n = game.players();
  std::vector<std::vector<std::optional<Rational>>> incons(n, std::vector<std::optional<Rational>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) incons[i][j] = inconsequentiality(game, i, j);

  const ordered_json nominal = equilibria_json(game, config.beta_schedule, config.sweep_threshold);

  // One job per evaluator; results come back in evaluator order.
  std::function<ReducedSection(std::size_t)> job = [&](std::size_t k) {
    const Evaluator& f = evaluators[k];
    ReducedGame r = config.all_observers ? reduce_game_all(game, config.hidden, f)
                                         : reduce_game(game, config.observer, config.hidden, f);
    ReducedSection s;
    s.json["evaluator"] = f.name();
    s.json["observers"] = ordered_json::array();
    for (int o : r.observers()) s.json["observers"].push_back(o + 1);
    s.json["hidden"] = config.hidden + 1;
    s.json["equilibria"] = equilibria_json(r.game(), config.beta_schedule, config.sweep_threshold);
    s.json["mpd"] = exact(max_pairwise_difference(game, r.game()));
    s.json["quality"] = ordered_json::array();
    for (Concept c : concepts) {
      QualityReport q = quality_report(game, r, c);
      s.json["quality"].push_back(quality_json(q));
      std::string concept_name(to_string(c));
      s.rows.push_back({f.name(), concept_name, "reduced_welfare_min", to_string(q.reduced_welfare_min), ""});
      s.rows.push_back({f.name(), concept_name, "reduced_welfare_max", to_string(q.reduced_welfare_max), ""});
      s.rows.push_back({f.name(), concept_name, "q_minus", q.q_minus ? to_string(*q.q_minus) : "", ""});
      s.rows.push_back({f.name(), concept_name, "q_plus", q.q_plus ? to_string(*q.q_plus) : "", ""});
    }
    s.rows.push_back({f.name(), "", "mpd", s.json["mpd"]["exact"].get<std::string>(), ""});
    for (const char* key : {"pne", "ss"}) {
      for (const auto& p : s.json["equilibria"][key]) s.rows.push_back({f.name(), key, "state", p.get<std::string>(), ""});
    }
    return s;
  };
  std::vector<ReducedSection> reduced = parallel_map(evaluators.size(), job);

  SuiteOptions options;
  options.observer = config.all_observers ? (config.hidden == 0 ? 1 : 0) : config.observer;
  options.hidden = config.hidden;
  std::vector<TheoremVerdict> verdicts = theorem_suite(game, evaluators, options);
  const bool passed = std::none_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.verdict == Verdict::Fail; });

  if (config.format == OutputFormat::Json) {
    ordered_json report;
    report["game"] = {{"players", n},
                      {"actions", game.action_counts()},
                      {"profiles", game.size()},
                      {"normalized", game.normalized()},
                      {"potential", potential.holds},
                      {"potential_max_violation", exact(potential.max_violation)},
                      {"identical_interest", is_identical_interest(game)}};
    ordered_json matrix = ordered_json::array();
    for (int i = 0; i < n; ++i) {
      ordered_json row = ordered_json::array();
      for (int j = 0; j < n; ++j) row.push_back(incons[i][j] ? ordered_json(to_string(*incons[i][j])) : ordered_json(nullptr));
      matrix.push_back(row);
    }
    report["inconsequentiality"] = {{"layout", "row i, column j: largest change player j can cause in player i's utility"},
                                    {"matrix", matrix}};
    report["nominal"] = nominal;
    report["reduced"] = ordered_json::array();
    for (auto& s : reduced) report["reduced"].push_back(std::move(s.json));
    report["verdicts"] = ordered_json::array();
    for (const auto& v : verdicts) report["verdicts"].push_back(verdict_json(&game, v));
    return {report.dump(2) + "\n", passed};
  }

  std::ostringstream out;
  out << "section,evaluator,concept,metric,value\n";
  auto row = [&](std::string_view section, std::string_view f, std::string_view c, std::string_view metric,
                 std::string_view value) {
    out << section << "," << csv_field(f) << "," << c << "," << metric << "," << csv_field(value) << "\n";
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (incons[i][j]) row("inconsequentiality", "", "", std::to_string(j + 1) + "->" + std::to_string(i + 1), to_string(*incons[i][j]));
  for (const char* key : {"pne", "ss"}) {
    for (const auto& p : nominal[key]) row("nominal", "", key, "state", p.get<std::string>());
  }
  for (const auto& s : reduced) {
    for (const auto& r : s.rows) row("reduced", r[0], r[1], r[2], r[3]);
  }
  for (const auto& v : verdicts) row("verdict", v.instance, v.theorem, std::string(to_string(v.verdict)), v.detail);
  return {out.str(), passed};
}

bool ReproduceResult::passed() const {
  return std::none_of(verdicts.begin(), verdicts.end(), [](const TheoremVerdict& v) { return v.verdict == Verdict::Fail; });
}

std::vector<std::string> reproduce_ids() {
  return {"intro", "prop-bad", "thm-pgbad", "thm-sspg", "prop-ii", "thm-ss",
          "thm-all", "thm-candogan", "prop-coarse", "eps-zero", "axioms"};
}

namespace {

Rational eps_in(const RunConfig& config, const Rational& fallback, const Rational& lo, bool lo_open, const Rational& hi,
                bool hi_open, const std::string& id) {
  Rational eps = config.eps.value_or(fallback);
  bool ok = (lo_open ? eps > lo : eps >= lo) && (hi_open ? eps < hi : eps <= hi);
  if (!ok) {
    throw std::invalid_argument(id + " needs eps in " + (lo_open ? "(" : "[") + to_string(lo) + ", " + to_string(hi) +
                                (hi_open ? ")" : "]") + ", got " + to_string(eps));
  }
  return eps;
}

std::vector<int> sample_shape(const RunConfig& config, std::uint64_t seed) {
  if (config.states) return three_player_shape(*config.states);
  std::mt19937_64 rng(seed ^ 0x5deece66dULL);
  std::uniform_int_distribution<int> dim(2, 3);
  return {dim(rng), dim(rng), dim(rng)};
}

std::string shape_name(const std::vector<int>& shape) {
  std::string s;
  for (std::size_t i = 0; i < shape.size(); ++i) s += (i ? "x" : "") + std::to_string(shape[i]);
  return s;
}

std::string sample_name(std::uint64_t seed, const std::vector<int>& shape) {
  return "seed=" + std::to_string(seed) + ", shape=" + shape_name(shape);
}

template <class Job>
std::vector<TheoremVerdict> sweep(std::size_t samples, Job job) {
  std::function<std::vector<TheoremVerdict>(std::size_t)> fn = job;
  std::vector<TheoremVerdict> out;
  for (auto& batch : parallel_map(samples, fn))
    for (auto& v : batch) out.push_back(std::move(v));
  return out;
}

}  // namespace

ReproduceResult cmd_reproduce(const std::string& id, const RunConfig& config) {
  ReproduceResult result;
  result.id = id;
  const auto evaluators = evaluators_or_builtin(config);
  const std::uint64_t seed = config.seed;

  if (id == "intro") {
    Rational delta = config.delta.value_or(Rational(1, 10));
    if (delta <= 0 || delta >= 3) throw std::invalid_argument("intro needs delta in (0, 3)");
    result.verdicts = check_intro(delta, evaluators);
  } else if (id == "prop-bad") {
    result.verdicts = check_all_games_bad(eps_in(config, Rational(1, 10), 0, true, 1, false, id), evaluators);
  } else if (id == "thm-pgbad") {
    result.verdicts = check_potential_abr(eps_in(config, Rational(1, 20), 0, true, Rational(1, 7), true, id), evaluators);
  } else if (id == "thm-sspg") {
    result.verdicts = check_potential_ss(eps_in(config, Rational(1, 20), 0, true, Rational(1, 7), true, id), evaluators);
  } else if (id == "thm-ss") {
    result.verdicts = check_identical_interest_ss(eps_in(config, Rational(1, 4), 0, true, Rational(1, 3), true, id), evaluators);
  } else if (id == "prop-ii") {
    Rational eps = eps_in(config, Rational(1, 2), 0, false, 1, false, id);
    result.verdicts = sweep(config.samples.value_or(200), [&](std::size_t k) {
      std::uint64_t s = seed + k;
      auto shape = sample_shape(config, s);
      TheoremVerdict v = check_identical_interest_pne(random_identical_interest_game({shape, eps, s}));
      v.instance = sample_name(s, shape);
      return std::vector<TheoremVerdict>{v};
    });
  } else if (id == "thm-all") {
    Rational eps = eps_in(config, Rational(1, 5), 0, false, 1, false, id);
    result.verdicts = sweep(config.samples.value_or(50), [&](std::size_t k) {
      std::uint64_t s = seed + k;
      auto shape = sample_shape(config, s);
      TheoremVerdict v = check_universal_hiding(random_identical_interest_game({shape, eps, s}));
      v.instance = sample_name(s, shape) + ", eps=" + to_string(eps);
      return std::vector<TheoremVerdict>{v};
    });
    // The block game's hidden player is 2eps_b-inconsequential.
    if (eps > 0 && eps < Rational(2, 3)) {
      result.verdicts.push_back(check_universal_hiding_tightness(eps / 2));
    } else {
      result.verdicts.push_back(TheoremVerdict{"thm-all", "tightness", "", 0, 0, Verdict::NotApplicable, {},
                                               "no block construction for eps=" + to_string(eps)});
    }
  } else if (id == "thm-candogan") {
    Rational eps = eps_in(config, Rational(1, 200), 0, false, 1, false, id);
    std::vector<Evaluator> bounded;
    for (const auto& f : evaluators)
      if (f.bounded()) bounded.push_back(f);
    if (bounded.empty()) throw std::invalid_argument("thm-candogan needs at least one bounded evaluator");
    RunConfig shaped = config;
    if (!shaped.states) shaped.states = 12;
    result.verdicts = sweep(config.samples.value_or(50), [&](std::size_t k) {
      std::uint64_t s = seed + k;
      auto shape = sample_shape(shaped, s);
      Game g = random_potential_game({shape, eps, s});
      std::vector<TheoremVerdict> out;
      for (const auto& f : bounded) {
        TheoremVerdict v = candogan_bound_check(g, reduce_game(g, 0, 1, f));
        v.instance = sample_name(s, shape) + ", evaluator=" + f.name();
        out.push_back(std::move(v));
      }
      return out;
    });
  } else if (id == "prop-coarse") {
    Rational eps = eps_in(config, Rational(1, 2), 0, false, 1, false, id);
    result.verdicts = sweep(config.samples.value_or(50), [&](std::size_t k) {
      // Redraw until the potential game has a unique equilibrium.
      for (std::uint64_t attempt = 0; attempt < 1000; ++attempt) {
        std::uint64_t s = seed + k * 1000 + attempt;
        auto shape = sample_shape(config, s);
        Game g = random_potential_game({shape, eps, s});
        if (pure_nash_equilibria(g).size() != 1) continue;
        CertificateVerdict c = coarse_alignment_certificate(g, reduced_potential(g, 1), 1, 0);
        c.verdict.instance = sample_name(s, shape) + ", proxy=reduced potential";
        if (!c.premise_holds) c.verdict.verdict = Verdict::Fail;
        return std::vector<TheoremVerdict>{c.verdict};
      }
      throw std::runtime_error("no potential game with a unique equilibrium found for sample " + std::to_string(k));
    });
  } else if (id == "eps-zero") {
    if (config.eps && *config.eps != 0) throw std::invalid_argument("eps-zero fixes eps = 0");
    result.verdicts = sweep(config.samples.value_or(50), [&](std::size_t k) {
      std::uint64_t s = seed + k;
      auto shape = sample_shape(config, s);
      Game g = random_potential_game({shape, Rational(0), s});
      std::vector<TheoremVerdict> out;
      for (const auto& f : evaluators) {
        TheoremVerdict v = check_zero_inconsequential(g, f, 0, 1);
        v.instance = sample_name(s, shape) + ", evaluator=" + f.name();
        out.push_back(std::move(v));
      }
      return out;
    });
  } else if (id == "axioms") {
    std::size_t trials = config.samples.value_or(10000);
    for (const auto& f : evaluators) result.verdicts.push_back(check_evaluator_axioms(f, trials, seed));
  } else {
    std::string known;
    for (const auto& k : reproduce_ids()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown experiment id \"" + id + "\" (known: " + known + ")");
  }
  return result;
}

std::string format_verdicts(const ReproduceResult& result, OutputFormat format) {
  if (format == OutputFormat::Json) {
    ordered_json doc;
    doc["experiment"] = result.id;
    doc["passed"] = result.passed();
    doc["verdicts"] = ordered_json::array();
    for (const auto& v : result.verdicts) doc["verdicts"].push_back(verdict_json(nullptr, v));
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "theorem,instance,verdict,bound,measured,witnesses,detail\n";
  for (const auto& v : result.verdicts) {
    std::string witnesses;
    for (std::size_t i = 0; i < v.witnesses.size(); ++i) witnesses += (i ? " " : "") + std::to_string(v.witnesses[i]);
    out << csv_field(v.theorem) << "," << csv_field(v.instance) << "," << to_string(v.verdict) << ","
        << to_string(v.bound) << "," << to_string(v.measured) << "," << witnesses << "," << csv_field(v.detail) << "\n";
  }
  return out.str();
}

}  // namespace proxygames
