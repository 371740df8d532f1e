#include "proxygames/game_io.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace proxygames {

using json = nlohmann::ordered_json;

namespace {

Rational number_at(const json& value, const std::string& where) {
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw GameFileError(where + ": " + e.what());
    }
  }
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? Rational(value.get<std::uint64_t>()) : Rational(value.get<std::int64_t>());
  }
  if (value.is_number_float()) {
    throw GameFileError(where + ": floating-point literal " + value.dump() + " is not exact; write it as a string");
  }
  throw GameFileError(where + ": expected a number string, got " + std::string(value.type_name()));
}

Payoffs tensor_at(const json& value, std::size_t size, const std::string& where) {
  if (!value.is_array()) throw GameFileError(where + ": expected an array");
  if (value.size() != size) {
    throw GameFileError(where + ": has " + std::to_string(value.size()) + " entries, expected " + std::to_string(size));
  }
  Payoffs t(static_cast<Eigen::Index>(size));
  for (std::size_t k = 0; k < size; ++k) t(static_cast<Eigen::Index>(k)) = number_at(value[k], where + "[" + std::to_string(k) + "]");
  return t;
}

const json& field(const json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) throw GameFileError(std::string("missing field \"") + name + "\"");
  return *it;
}

Evaluator evaluator_at(const json& spec) {
  if (!spec.is_object()) throw GameFileError("evaluator: expected an object");
  std::string name = spec.value("name", "custom");
  bool bounded = spec.value("bounded", false);
  if (!spec.contains("table")) {
    try {
      return Evaluator::by_name(name);
    } catch (const std::invalid_argument& e) {
      throw GameFileError(std::string("evaluator: ") + e.what());
    }
  }
  Evaluator::Table table;
  const json& rows = spec["table"];
  if (!rows.is_array()) throw GameFileError("evaluator.table: expected an array");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string where = "evaluator.table[" + std::to_string(r) + "]";
    const json& row = rows[r];
    if (!row.is_object() || !row.contains("input") || !row.contains("value") || !row["input"].is_array()) {
      throw GameFileError(where + ": expected {\"input\": [...], \"value\": ...}");
    }
    std::vector<Rational> input;
    for (std::size_t k = 0; k < row["input"].size(); ++k) {
      input.push_back(number_at(row["input"][k], where + ".input[" + std::to_string(k) + "]"));
    }
    std::sort(input.begin(), input.end());
    table[input] = number_at(row["value"], where + ".value");
  }
  return Evaluator::from_table(std::move(table), bounded, name);
}

}  // namespace

GameFile parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameFileError(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw GameFileError("top level must be an object");

  const json& players_field = field(doc, "players");
  if (!players_field.is_number_integer() || players_field.get<long>() < 1) {
    throw GameFileError("players: expected a positive integer");
  }
  const int players = players_field.get<int>();

  const json& actions_field = field(doc, "actions");
  if (!actions_field.is_array() || actions_field.size() != static_cast<std::size_t>(players)) {
    throw GameFileError("actions: expected an array of " + std::to_string(players) + " integers");
  }
  std::vector<int> counts;
  std::size_t size = 1;
  for (std::size_t i = 0; i < actions_field.size(); ++i) {
    if (!actions_field[i].is_number_integer() || actions_field[i].get<long>() < 1) {
      throw GameFileError("actions[" + std::to_string(i) + "]: expected a positive integer");
    }
    counts.push_back(actions_field[i].get<int>());
    size *= static_cast<std::size_t>(counts.back());
  }

  const json& utilities_field = field(doc, "utilities");
  if (!utilities_field.is_array() || utilities_field.size() != static_cast<std::size_t>(players)) {
    throw GameFileError("utilities: expected one array per player (" + std::to_string(players) + ")");
  }
  std::vector<Payoffs> utilities;
  for (int i = 0; i < players; ++i) {
    utilities.push_back(tensor_at(utilities_field[static_cast<std::size_t>(i)], size,
                                  "utilities of player " + std::to_string(i + 1)));
  }
  Payoffs welfare = tensor_at(field(doc, "welfare"), size, "welfare");

  Game::Labels labels;
  if (doc.contains("labels")) {
    const json& l = doc["labels"];
    if (!l.is_array() || l.size() != static_cast<std::size_t>(players)) {
      throw GameFileError("labels: expected one array of names per player");
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (!l[i].is_array() || l[i].size() != static_cast<std::size_t>(counts[i])) {
        throw GameFileError("labels of player " + std::to_string(i + 1) + ": expected " + std::to_string(counts[i]) + " names");
      }
      std::vector<std::string> names;
      for (const auto& name : l[i]) {
        if (!name.is_string()) throw GameFileError("labels of player " + std::to_string(i + 1) + ": names must be strings");
        names.push_back(name.get<std::string>());
      }
      labels.push_back(std::move(names));
    }
  }

  const bool normalized = welfare.minCoeff() >= 0 && welfare.maxCoeff() == 1;
  std::optional<Evaluator> evaluator;
  if (doc.contains("evaluator")) evaluator = evaluator_at(doc["evaluator"]);
  try {
    return {Game(std::move(counts), std::move(utilities), std::move(welfare), normalized, std::move(labels)),
            std::move(evaluator)};
  } catch (const std::invalid_argument& e) {
    throw GameFileError(std::string("invalid game: ") + e.what());
  }
}

GameFile load_game(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GameFileError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_game(buffer.str());
  } catch (const GameFileError& e) {
    throw GameFileError(path.string() + ": " + e.what());
  }
}

std::string game_to_json(const Game& game, int indent) {
  auto strings = [](const Payoffs& t) {
    json arr = json::array();
    for (Eigen::Index k = 0; k < t.size(); ++k) arr.push_back(to_string(t(k)));
    return arr;
  };
  json doc;
  doc["players"] = game.players();
  doc["actions"] = game.action_counts();
  doc["utilities"] = json::array();
  for (int i = 0; i < game.players(); ++i) doc["utilities"].push_back(strings(game.utility(i)));
  doc["welfare"] = strings(game.welfare());
  if (!game.labels().empty()) doc["labels"] = game.labels();
  return doc.dump(indent) + "\n";
}

void save_game(const Game& game, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw GameFileError("cannot write " + path.string());
  out << game_to_json(game);
}

void write_game_csv(const Game& game, std::ostream& out) {
  for (int i = 0; i < game.players(); ++i) out << "a" << i + 1 << ",";
  for (int i = 0; i < game.players(); ++i) out << "U" << i + 1 << ",";
  out << "W\n";
  for (ProfileIndex a = 0; a < game.size(); ++a) {
    for (int i = 0; i < game.players(); ++i) out << game.space().action(a, i) << ",";
    for (int i = 0; i < game.players(); ++i) out << to_string(game.utility(i)(static_cast<Eigen::Index>(a))) << ",";
    out << to_string(game.welfare()(static_cast<Eigen::Index>(a))) << "\n";
  }
}

}  // namespace proxygames
