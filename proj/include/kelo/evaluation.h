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

#ifndef KELO_EVALUATION_H_
#define KELO_EVALUATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "kelo/types.h"

namespace kelo {

// -ln of the probability given to the realized outcome. Throws
// ZeroProbabilityError (game index npos) when that probability is zero.
double log_score(const OutcomeProbs& prediction, Outcome outcome);

// Mean of the last ceil(N/2) entries.
double mean_second_half_ls(std::span<const double> per_game_ls);

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Shortest interval spanned by ceil(level * n) consecutive order statistics;
// ties go to the smallest lower bound.
Interval credibility_interval(std::span<const double> values,
                              double level = 0.95);

struct EmpiricalStats {
  double p_home = 0.0;
  double p_away = 0.0;
  double p_draw = 0.0;
  double delta = 0.0;           // p_home - p_away
  double kappa = 0.0;           // 2 p_draw / (1 - p_draw)
  bool kappa_infinite = false;  // every game was drawn
  std::size_t n_games = 0;
};

EmpiricalStats empirical_stats(std::span<const GameRecord> games);

// kappa / (2 + kappa): draw frequency implied by a draw parameter.
double implied_draw_freq(double kappa);

// 2 p / (1 - p): draw parameter matching a draw frequency p < 1.
double kappa_from_draw_freq(double p_draw);

enum class EvalWindow { kSecondHalf, kFull };

struct EvalReport {
  double mean_ls = 0.0;
  Interval interval;
  std::vector<double> per_game_ls;  // scores of the games in the window
  std::size_t window_begin = 0;     // [begin, end) into the season
  std::size_t window_end = 0;
};

// Scores predictions[l] against games[l].outcome over the window. Zero
// probability errors carry the offending game index.
EvalReport evaluate_predictions(std::span<const OutcomeProbs> predictions,
                                std::span<const GameRecord> games,
                                EvalWindow window = EvalWindow::kSecondHalf);

}  // namespace kelo

#endif  // KELO_EVALUATION_H_
