// Copyright 2026 The kelo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kelo/evaluation.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "kelo/error.h"

namespace kelo {

double log_score(const OutcomeProbs& prediction, Outcome outcome) {
  const double p = prediction.of(outcome);
  if (!(p > 0.0)) {
    throw ZeroProbabilityError(std::string("realized outcome ") +
                                   outcome_code(outcome) +
                                   " was predicted with probability 0",
                               std::numeric_limits<std::size_t>::max());
  }
  return -std::log(p);
}

double mean_second_half_ls(std::span<const double> per_game_ls) {
  if (per_game_ls.empty()) {
    throw InvalidArgument("cannot average an empty list of scores");
  }
  const std::size_t n = per_game_ls.size();
  const auto tail = per_game_ls.subspan(n / 2);
  return std::accumulate(tail.begin(), tail.end(), 0.0) /
         static_cast<double>(tail.size());
}

Interval credibility_interval(std::span<const double> values, double level) {
  if (values.empty()) {
    throw InvalidArgument("credibility interval of an empty list");
  }
  if (!(level > 0.0 && level <= 1.0)) {
    throw InvalidArgument("credibility level must lie in (0, 1]");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t n = sorted.size();
  // Guard against level * n landing a hair above an integer.
  auto k = static_cast<std::size_t>(
      std::ceil(level * static_cast<double>(n) - 1e-9));
  k = std::clamp<std::size_t>(k, 1, n);
  Interval best{sorted[0], sorted[k - 1]};
  for (std::size_t i = 1; i + k <= n; ++i) {
    if (sorted[i + k - 1] - sorted[i] < best.high - best.low) {
      best = {sorted[i], sorted[i + k - 1]};
    }
  }
  return best;
}

EmpiricalStats empirical_stats(std::span<const GameRecord> games) {
  if (games.empty()) {
    throw InvalidArgument("outcome statistics of an empty game list");
  }
  std::size_t home = 0, away = 0, draw = 0;
  for (const auto& g : games) {
    switch (g.outcome) {
      case Outcome::kHome:
        ++home;
        break;
      case Outcome::kAway:
        ++away;
        break;
      case Outcome::kDraw:
        ++draw;
        break;
    }
  }
  const double n = static_cast<double>(games.size());
  EmpiricalStats stats;
  stats.n_games = games.size();
  stats.p_home = static_cast<double>(home) / n;
  stats.p_away = static_cast<double>(away) / n;
  stats.p_draw = static_cast<double>(draw) / n;
  stats.delta = stats.p_home - stats.p_away;
  if (draw == games.size()) {
    stats.kappa_infinite = true;
    stats.kappa = std::numeric_limits<double>::infinity();
  } else {
    stats.kappa = kappa_from_draw_freq(stats.p_draw);
  }
  return stats;
}

double implied_draw_freq(double kappa) {
  if (!(kappa >= 0.0)) throw InvalidArgument("kappa must be non-negative");
  return kappa / (2.0 + kappa);
}

double kappa_from_draw_freq(double p_draw) {
  if (!(p_draw >= 0.0 && p_draw < 1.0)) {
    throw InvalidArgument("draw frequency must lie in [0, 1)");
  }
  return 2.0 * p_draw / (1.0 - p_draw);
}

EvalReport evaluate_predictions(std::span<const OutcomeProbs> predictions,
                                std::span<const GameRecord> games,
                                EvalWindow window) {
  if (predictions.size() != games.size()) {
    throw InvalidArgument("one prediction per game is required");
  }
  if (games.empty()) throw InvalidArgument("no games to evaluate");
  EvalReport report;
  report.window_begin =
      window == EvalWindow::kSecondHalf ? games.size() / 2 : 0;
  report.window_end = games.size();
  report.per_game_ls.reserve(report.window_end - report.window_begin);
  for (std::size_t l = report.window_begin; l < report.window_end; ++l) {
    try {
      report.per_game_ls.push_back(log_score(predictions[l], games[l].outcome));
    } catch (const ZeroProbabilityError& e) {
      throw ZeroProbabilityError("game " + std::to_string(l) + ": " + e.what(),
                                 l);
    }
  }
  report.mean_ls =
      std::accumulate(report.per_game_ls.begin(), report.per_game_ls.end(),
                      0.0) /
      static_cast<double>(report.per_game_ls.size());
  report.interval = credibility_interval(report.per_game_ls);
  return report;
}

}  // namespace kelo
