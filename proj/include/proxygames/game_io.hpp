#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "proxygames/evaluators.hpp"
#include "proxygames/game.hpp"

namespace proxygames {

/// Raised for malformed game files. The message names the offending field.
class GameFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GameFile {
  Game game;
  /// Custom evaluator table carried by the file, if any.
  std::optional<Evaluator> evaluator;
};

/// JSON game file: players, actions, utilities (one flat row-major array per
/// player), welfare, optional labels and an optional custom evaluator:
///   "evaluator": {"name": "...", "bounded": true,
///                 "table": [{"input": ["0", "1/2"], "value": "1/4"}, ...]}
/// Numbers are strings ("p/q" or decimals) or JSON integers. Floats are
/// rejected since they would not round-trip exactly.
GameFile parse_game(std::string_view text);
GameFile load_game(const std::filesystem::path& path);

std::string game_to_json(const Game& game, int indent = 2);
void save_game(const Game& game, const std::filesystem::path& path);

/// One row per profile: the actions, then U_1..U_n and W as exact "p/q".
void write_game_csv(const Game& game, std::ostream& out);

}  // namespace proxygames
