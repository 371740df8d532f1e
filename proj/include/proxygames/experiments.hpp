#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "proxygames/analysis.hpp"
#include "proxygames/evaluators.hpp"
#include "proxygames/game.hpp"

namespace proxygames {

enum class OutputFormat { Json, Csv };

OutputFormat parse_format(std::string_view text);

/// Player indices are 0-based here; the CLI converts from 1-based flags.
struct RunConfig {
  std::vector<Evaluator> evaluators;
  int observer = 0;
  int hidden = 1;
  bool all_observers = false;
  /// Concepts to report quality for. Empty means all three.
  std::vector<Concept> concepts;
  std::vector<double> beta_schedule;
  double sweep_threshold = 0.5;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::Json;

  std::optional<Rational> eps;
  std::optional<Rational> delta;
  std::optional<std::size_t> samples;
  std::optional<int> states;
};

/// Throws std::invalid_argument if indices are out of range or the β
/// schedule is not strictly increasing and positive.
void validate_config(const RunConfig& config, const Game& game);

struct AnalyzeResult {
  /// Deterministic given the game and config.
  std::string report;
  /// False when any applicable verdict fails.
  bool passed = true;
};

AnalyzeResult cmd_analyze(const Game& game, const RunConfig& config);

struct ReproduceResult {
  std::string id;
  std::vector<TheoremVerdict> verdicts;
  bool passed() const;
};

std::vector<std::string> reproduce_ids();

/// Throws std::invalid_argument for unknown ids and inadmissible parameters.
ReproduceResult cmd_reproduce(const std::string& id, const RunConfig& config);

std::string format_verdicts(const ReproduceResult& result, OutputFormat format);

/// Worker count: hardware concurrency, capped by PROXYGAMES_THREADS.
unsigned worker_count();

/// Runs job(k) for k in [0, count) on worker_count() threads. Results keep
/// index order; the first exception (lowest index) is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& job) {
  std::vector<std::optional<T>> results(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < count; k = next++) {
      try {
        results[k].emplace(job(k));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    if (errors[k]) std::rethrow_exception(errors[k]);
    out.push_back(std::move(*results[k]));
  }
  return out;
}

/// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(std::string_view text);

}  // namespace proxygames
