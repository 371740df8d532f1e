#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "proxygames/experiments.hpp"
#include "proxygames/game_io.hpp"
#include "proxygames/constructions.hpp"

using namespace proxygames;

namespace {

struct Flags {
  std::string game_path;
  std::vector<std::string> evaluators;
  int observer = 1;
  int hidden = 2;
  bool all_observers = false;
  std::string concept_name;
  std::string beta_schedule;
  std::uint64_t seed = 1;
  std::string eps, delta;
  std::string format = "json";
  std::string out;
  std::size_t samples = 0;
  int states = 0;
  std::string kind;
  std::string experiment;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<double> parse_schedule(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--beta-schedule: \"" + item + "\" is not a number");
    }
  }
  if (out.empty()) throw UsageError("--beta-schedule is empty");
  return out;
}

Rational rational_flag(const std::string& name, const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(name + ": " + e.what());
  }
}

RunConfig make_config(const Flags& f, const CLI::App* app, const std::optional<Evaluator>& file_evaluator) {
  RunConfig c;
  for (const auto& list : f.evaluators) {
    std::stringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (name == "custom") {
        if (!file_evaluator) throw UsageError("--evaluator custom needs a game file with an evaluator table");
        c.evaluators.push_back(*file_evaluator);
      } else {
        try {
          c.evaluators.push_back(Evaluator::by_name(name));
        } catch (const std::invalid_argument& e) {
          throw UsageError(std::string("--evaluator: ") + e.what());
        }
      }
    }
  }
  if (f.evaluators.empty() && file_evaluator) {
    c.evaluators = builtin_evaluators();
    c.evaluators.push_back(*file_evaluator);
  }
  c.observer = f.observer - 1;
  c.hidden = f.hidden - 1;
  c.all_observers = f.all_observers;
  if (!f.concept_name.empty()) {
    try {
      c.concepts = {parse_concept(f.concept_name)};
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--concept: ") + e.what());
    }
  }
  if (!f.beta_schedule.empty()) c.beta_schedule = parse_schedule(f.beta_schedule);
  c.seed = f.seed;
  c.format = parse_format(f.format);
  if (!f.eps.empty()) c.eps = rational_flag("--eps", f.eps);
  if (!f.delta.empty()) c.delta = rational_flag("--delta", f.delta);
  auto given = [app](const char* name) {
    const CLI::Option* opt = app->get_option_no_throw(name);
    return opt && opt->count() > 0;
  };
  if (given("--samples")) c.samples = f.samples;
  if (given("--states")) c.states = f.states;
  return c;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Game generate(const Flags& f, const RunConfig& c) {
  const Rational eps = c.eps.value_or(Rational(1, 10));
  if (f.kind == "intro") return intro_game(c.delta.value_or(Rational(1, 10)));
  if (f.kind == "staggered") return staggered_potential_game(eps);
  if (f.kind == "block") return block_identical_interest_game(eps).game;
  std::vector<int> shape = three_player_shape(c.states.value_or(12));
  if (f.kind == "random-potential") return random_potential_game({shape, eps, c.seed});
  if (f.kind == "random-identical") return random_identical_interest_game({shape, eps, c.seed});
  throw UsageError("unknown game kind \"" + f.kind + "\"");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proxy payoffs for hidden players in strategic-form games"};
  app.require_subcommand(1);
  Flags f;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", f.seed, "RNG seed")->capture_default_str();
    sub->add_option("--eps", f.eps, "Rational parameter, e.g. 1/20 or 0.05");
    sub->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    sub->add_option("--out", f.out, "Write output to PATH instead of stdout");
    sub->add_option("--states", f.states, "Number of action profiles of random games")->check(CLI::PositiveNumber);
  };

  auto* gen = app.add_subcommand("generate", "Write a game file");
  gen->add_option("kind", f.kind, "intro | staggered | block | random-potential | random-identical")
      ->required()
      ->check(CLI::IsMember({"intro", "staggered", "block", "random-potential", "random-identical"}));
  gen->add_option("--delta", f.delta, "Intro game parameter");
  common(gen);

  auto* analyze = app.add_subcommand("analyze", "Report equilibria, proxies and verdicts for a game file");
  analyze->add_option("--game", f.game_path, "Game file (JSON)")->required();
  analyze->add_option("--evaluator", f.evaluators, "sum, max, min, mean or custom; repeatable or comma-separated");
  analyze->add_option("--observer", f.observer, "Observing player (1-based)")->capture_default_str();
  analyze->add_option("--hidden", f.hidden, "Hidden player (1-based)")->capture_default_str();
  analyze->add_flag("--all-observers", f.all_observers, "Every player except the hidden one uses the proxy");
  analyze->add_option("--concept", f.concept_name, "pne | abr | ss (default: all)");
  analyze->add_option("--beta-schedule", f.beta_schedule, "Comma-separated increasing betas for a numeric sweep");
  common(analyze);

  auto* reproduce = app.add_subcommand("reproduce", "Run a named theorem check");
  std::string ids;
  for (const auto& id : reproduce_ids()) ids += (ids.empty() ? "" : " | ") + id;
  reproduce->add_option("id", f.experiment, ids)->required();
  reproduce->add_option("--evaluator", f.evaluators, "Evaluators to test (default: sum,max,min,mean)");
  reproduce->add_option("--delta", f.delta, "Intro game parameter");
  reproduce->add_option("--samples", f.samples, "Random instances (or axiom trials)")->check(CLI::PositiveNumber);
  common(reproduce);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (gen->parsed()) {
      RunConfig c = make_config(f, gen, std::nullopt);
      Game g = generate(f, c);
      if (c.format == OutputFormat::Csv) {
        std::ostringstream out;
        write_game_csv(g, out);
        emit(out.str(), f.out);
      } else {
        emit(game_to_json(g), f.out);
      }
      return 0;
    }
    if (analyze->parsed()) {
      GameFile file = load_game(f.game_path);
      RunConfig c = make_config(f, analyze, file.evaluator);
      try {
        validate_config(c, file.game);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      AnalyzeResult result = cmd_analyze(file.game, c);
      emit(result.report, f.out);
      return result.passed ? 0 : 1;
    }
    RunConfig c = make_config(f, reproduce, std::nullopt);
    ReproduceResult result;
    try {
      result = cmd_reproduce(f.experiment, c);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    emit(format_verdicts(result, c.format), f.out);
    std::size_t failed = 0;
    for (const auto& v : result.verdicts) failed += v.verdict == Verdict::Fail;
    std::cerr << f.experiment << ": " << result.verdicts.size() - failed << "/" << result.verdicts.size()
              << " verdicts without failure\n";
    return result.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GameFileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
