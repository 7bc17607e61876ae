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

#ifndef KELO_SIM_H_
#define KELO_SIM_H_

// Synthetic leagues with known ratings.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "kelo/data.h"
#include "kelo/models.h"
#include "kelo/types.h"

namespace kelo {

// SplitMix64 (Steele, Lea and Flood, 2014). The state is a counter advanced
// by 0x9E3779B97F4A7C15 per draw; the output is the counter passed through
// the finalizer
//   z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27; z *= 0x94D049BB133111EB;
//   z ^= z >> 31.
// uniform() takes the top 53 bits: (next() >> 11) * 2^-53, in [0, 1).
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct SimSpec {
  std::vector<double> theta_true;
  ModelParams model;
  std::size_t rounds = 1;
  std::uint64_t seed = 0;

  void validate() const;
};

using Pairing = std::pair<TeamId, TeamId>;  // (home, away)

// `rounds` double round-robins by the circle method: the first half-cycle
// meets every pair once, the second repeats it with home and away swapped.
// Each round holds M (M - 1) games. Odd M gets a bye each matchday.
std::vector<Pairing> generate_schedule(std::size_t num_teams,
                                       std::size_t rounds);

// Inverse-CDF draw over the ordered categories (H, D, A) of
// predict_probs(v, model). Consumes exactly one uniform variate.
Outcome sample_outcome(double v, const ModelParams& model, SplitMix64& rng);

struct SimulatedSeason {
  Dataset dataset;  // teams named T01, T02, ...; id m has theta_true[m]
  std::vector<double> theta_true;
};

// Dates are synthetic: one matchday per day starting 2000-08-01.
SimulatedSeason generate_season(const SimSpec& spec);

struct RecoveryMetrics {
  double rank_correlation = 0.0;  // Spearman, average ranks for ties
  double centered_rmse = 0.0;     // RMSE after removing each vector's mean
};

RecoveryMetrics recovery_metrics(std::span<const double> theta_true,
                                 std::span<const double> theta_est);

}  // namespace kelo

#endif  // KELO_SIM_H_
