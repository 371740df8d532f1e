#include "doctest.h"
#include "support.hpp"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "proxygames/experiments.hpp"
#include "proxygames/game_io.hpp"
#include "proxygames/constructions.hpp"

using namespace proxygames;
using testing::R;

namespace {

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("proxygames_test_" + name);
}

std::string minimal_game(const std::string& u2) {
  return R"({"players": 2, "actions": [2, 1],
             "utilities": [["0", "1"], )" + u2 + R"(],
             "welfare": ["1/3", 1]})";
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) {
      out.push_back(cell);
      cell.clear();
    } else cell += c;
  }
  out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("game files round-trip exactly") {
  Game g = intro_game(R("1/10"));
  auto path = temp_path("intro.json");
  save_game(g, path);
  GameFile loaded = load_game(path);
  CHECK(loaded.game.action_counts() == g.action_counts());
  for (int i = 0; i < 3; ++i) CHECK(loaded.game.utility(i) == g.utility(i));
  CHECK(loaded.game.welfare() == g.welfare());
  CHECK(loaded.game.labels() == g.labels());
  CHECK(game_to_json(loaded.game) == game_to_json(g));
  std::filesystem::remove(path);
}

TEST_CASE("numbers parse to exact rationals") {
  GameFile f = parse_game(minimal_game(R"(["0.1", "-2"])"));
  CHECK(f.game.welfare()(0) == Rational(1, 3));
  CHECK(f.game.utility(1)(0) == Rational(1, 10));
  CHECK_FALSE(f.evaluator.has_value());
}

TEST_CASE("game file errors name the field") {
  auto message = [](const std::string& text) {
    try {
      parse_game(text);
    } catch (const GameFileError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(minimal_game(R"(["0"])")).find("player 2") != std::string::npos);
  CHECK(message(minimal_game(R"(["0", 0.5])")).find("not exact") != std::string::npos);
  CHECK(message(minimal_game(R"(["0", "x"])")).find("utilities of player 2[1]") != std::string::npos);
  CHECK(message(R"({"players": 2, "actions": [2, 1]})").find("utilities") != std::string::npos);
  CHECK(message("{\n\"players\": 2,\n oops}").find("line 3") != std::string::npos);
  CHECK(message(R"({"players": 1, "actions": [2], "utilities": [["0", "1"]], "welfare": ["0", "2"]})") == "no error");
  CHECK_THROWS_AS(load_game(temp_path("missing.json")), GameFileError);
}

TEST_CASE("custom evaluator tables in game files") {
  std::string text = R"({"players": 3, "actions": [2, 2, 1],
    "utilities": [["0", "1", "1", "1"], ["0", "0", "0", "1"], ["0", "0", "0", "1"]],
    "welfare": ["0", "0", "0", "1"],
    "evaluator": {"name": "avg", "bounded": true, "table": [
      {"input": ["0", "1"], "value": "1/2"}, {"input": ["1", "1"], "value": "1"}]}})";
  GameFile f = parse_game(text);
  REQUIRE(f.evaluator.has_value());
  CHECK(f.evaluator->name() == "avg");
  ReducedGame r = reduce_game(f.game, 0, 1, *f.evaluator);
  CHECK(r.proxy(0)(0) == Rational(1, 2));
  CHECK(r.proxy(0)(2) == 1);
}

TEST_CASE("analyze reports are deterministic") {
  Game g = intro_game(R("1/10"));
  RunConfig c;
  c.evaluators = {Evaluator::max()};
  AnalyzeResult first = cmd_analyze(g, c);
  AnalyzeResult second = cmd_analyze(g, c);
  CHECK(first.report == second.report);
  CHECK(first.passed);
  auto doc = nlohmann::json::parse(first.report);
  CHECK(doc["nominal"]["pne"] == nlohmann::json::array({"(A,A,left)"}));
  CHECK(doc["reduced"][0]["equilibria"]["pne"] == nlohmann::json::array({"(B,B,right)"}));
  CHECK(doc["reduced"][0]["quality"][1]["concept"] == "abr");
  CHECK(doc["reduced"][0]["quality"][1]["q_minus"]["exact"] == "5/29");
  CHECK(doc["reduced"][0]["quality"][1]["q_minus"]["decimal"].get<double>() == doctest::Approx(0.1724).epsilon(1e-3));

  c.format = OutputFormat::Csv;
  c.beta_schedule = {1, 10};
  CHECK(cmd_analyze(g, c).report == cmd_analyze(g, c).report);
}

TEST_CASE("a hidden player with one action changes nothing") {
  Game g = random_potential_game({{3, 1, 2}, R("1/5"), 4});
  RunConfig c;
  auto doc = nlohmann::json::parse(cmd_analyze(g, c).report);
  for (const auto& section : doc["reduced"]) {
    CHECK(section["equilibria"] == doc["nominal"]);
    CHECK(section["mpd"]["exact"] == "0");
  }
}

TEST_CASE("config validation") {
  Game g = intro_game(R("1/10"));
  RunConfig c;
  c.hidden = 3;
  CHECK_THROWS_AS(validate_config(c, g), std::invalid_argument);
  c.hidden = 0;
  c.observer = 0;
  CHECK_THROWS_AS(validate_config(c, g), std::invalid_argument);
  c.all_observers = true;
  CHECK_NOTHROW(validate_config(c, g));
  c.beta_schedule = {1, 1};
  CHECK_THROWS_AS(validate_config(c, g), std::invalid_argument);
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("reproduce parameter validation") {
  RunConfig c;
  c.eps = R("1/7");
  CHECK_THROWS_AS(cmd_reproduce("thm-pgbad", c), std::invalid_argument);
  CHECK_THROWS_AS(cmd_reproduce("thm-sspg", c), std::invalid_argument);
  c.eps = R("1/3");
  CHECK_THROWS_AS(cmd_reproduce("thm-ss", c), std::invalid_argument);
  CHECK_THROWS_AS(cmd_reproduce("thm-0", RunConfig{}), std::invalid_argument);
  RunConfig sum_only;
  sum_only.evaluators = {Evaluator::sum()};
  CHECK_THROWS_AS(cmd_reproduce("thm-candogan", sum_only), std::invalid_argument);
  RunConfig bad_delta;
  bad_delta.delta = 0;
  CHECK_THROWS_AS(cmd_reproduce("intro", bad_delta), std::invalid_argument);
}

TEST_CASE("reproduce runs") {
  RunConfig c;
  c.eps = R("0.05");
  ReproduceResult pg = cmd_reproduce("thm-pgbad", c);
  CHECK(pg.passed());
  for (const auto& v : pg.verdicts) {
    CHECK(v.measured == R("0.3"));
    CHECK(v.detail.find("(13,0,12)") != std::string::npos);
  }

  RunConfig zero;
  zero.eps = 0;
  zero.samples = 10;
  ReproduceResult all = cmd_reproduce("thm-all", zero);
  CHECK(all.passed());
  for (const auto& v : all.verdicts)
    if (v.verdict == Verdict::Pass) CHECK(v.measured == 1);

  RunConfig small;
  small.samples = 5;
  for (const auto& id : reproduce_ids()) CHECK_MESSAGE(cmd_reproduce(id, small).passed(), id);
}

TEST_CASE("verdict CSV re-parses to exact rationals") {
  ReproduceResult r = cmd_reproduce("intro", RunConfig{});
  std::istringstream csv(format_verdicts(r, OutputFormat::Csv));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "theorem,instance,verdict,bound,measured,witnesses,detail");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    auto cells = split(line);
    REQUIRE(cells.size() == 7);
    CHECK(parse_rational(cells[3]) == r.verdicts[rows].bound);
    CHECK(parse_rational(cells[4]) == Rational(5, 29));
    ++rows;
  }
  CHECK(rows == r.verdicts.size());
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
}

TEST_CASE("game CSV carries exact values") {
  std::ostringstream out;
  write_game_csv(intro_game(R("1/10")), out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "a1,a2,a3,U1,U2,U3,W");
  std::getline(in, line);
  CHECK(line == "0,0,0,9/10,1,1,1");
}

TEST_CASE("parallel map keeps order and caps workers") {
  setenv("PROXYGAMES_THREADS", "2", 1);
  CHECK(worker_count() <= 2);
  std::function<int(std::size_t)> square = [](std::size_t k) { return static_cast<int>(k * k); };
  auto out = parallel_map<int>(100, square);
  for (std::size_t k = 0; k < 100; ++k) CHECK(out[k] == static_cast<int>(k * k));
  std::function<int(std::size_t)> failing = [](std::size_t k) -> int {
    if (k == 7) throw std::runtime_error("seven");
    return 0;
  };
  CHECK_THROWS_WITH(parallel_map<int>(20, failing), "seven");
  setenv("PROXYGAMES_THREADS", "1", 1);
  CHECK(worker_count() == 1);
  unsetenv("PROXYGAMES_THREADS");
}
