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

#include "kelo/sim.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <string>

#include "kelo/error.h"

namespace kelo {
namespace {

std::vector<double> average_ranks(std::span<const double> x) {
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> ranks(x.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && x[order[j + 1]] == x[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sab += (a[i] - ma) * (b[i] - mb);
    saa += (a[i] - ma) * (a[i] - ma);
    sbb += (b[i] - mb) * (b[i] - mb);
  }
  if (saa == 0.0 || sbb == 0.0) return 0.0;
  return sab / std::sqrt(saa * sbb);
}

std::string team_name(std::size_t index, std::size_t num_teams) {
  const std::size_t width = std::max<std::size_t>(
      2, std::to_string(num_teams).size());
  std::string digits = std::to_string(index + 1);
  return "T" + std::string(width - digits.size(), '0') + digits;
}

}  // namespace

void SimSpec::validate() const {
  if (theta_true.size() < 2) {
    throw InvalidArgument("a league needs at least two teams");
  }
  if (rounds < 1) throw InvalidArgument("rounds must be at least 1");
  for (double t : theta_true) {
    if (!std::isfinite(t)) throw InvalidArgument("ratings must be finite");
  }
  model.validate();
}

std::vector<Pairing> generate_schedule(std::size_t num_teams,
                                       std::size_t rounds) {
  if (num_teams < 2) {
    throw InvalidArgument("a schedule needs at least two teams");
  }
  const std::size_t n = num_teams + num_teams % 2;  // slot n-1 is the bye
  const std::size_t bye = num_teams % 2 ? num_teams : n;

  std::vector<Pairing> half_cycle;
  std::vector<std::size_t> slots(n);
  std::iota(slots.begin(), slots.end(), 0);
  for (std::size_t day = 0; day + 1 < n; ++day) {
    for (std::size_t i = 0; i < n / 2; ++i) {
      std::size_t a = slots[i];
      std::size_t b = slots[n - 1 - i];
      // Alternate venues so that no team is always at home.
      const bool flip = i == 0 ? day % 2 == 1 : i % 2 == 1;
      if (flip) std::swap(a, b);
      if (a != bye && b != bye) half_cycle.emplace_back(a, b);
    }
    // Slot 0 stays fixed, the others rotate by one.
    std::rotate(slots.begin() + 1, slots.end() - 1, slots.end());
  }

  std::vector<Pairing> schedule;
  schedule.reserve(2 * half_cycle.size() * rounds);
  for (std::size_t r = 0; r < rounds; ++r) {
    schedule.insert(schedule.end(), half_cycle.begin(), half_cycle.end());
    for (const auto& [home, away] : half_cycle) {
      schedule.emplace_back(away, home);
    }
  }
  return schedule;
}

Outcome sample_outcome(double v, const ModelParams& model, SplitMix64& rng) {
  const OutcomeProbs p = predict_probs(v, model);
  const double u = rng.uniform();
  if (u < p.home) return Outcome::kHome;
  if (u < p.home + p.draw) return Outcome::kDraw;
  return Outcome::kAway;
}

SimulatedSeason generate_season(const SimSpec& spec) {
  spec.validate();
  const std::size_t m = spec.theta_true.size();
  const auto schedule = generate_schedule(m, spec.rounds);
  const std::size_t per_day = m / 2;
  const std::chrono::sys_days start{std::chrono::year{2000} /
                                    std::chrono::August / 1};

  SplitMix64 rng(spec.seed);
  std::vector<MatchRow> rows;
  rows.reserve(schedule.size());
  for (std::size_t l = 0; l < schedule.size(); ++l) {
    const auto [home, away] = schedule[l];
    MatchRow row;
    row.home_team = team_name(home, m);
    row.away_team = team_name(away, m);
    row.game.date = std::chrono::year_month_day{
        start + std::chrono::days{static_cast<int>(l / per_day)}};
    row.game.outcome = sample_outcome(
        spec.theta_true[home] - spec.theta_true[away], spec.model, rng);
    rows.push_back(std::move(row));
  }
  return {build_dataset(std::move(rows)), spec.theta_true};
}

RecoveryMetrics recovery_metrics(std::span<const double> theta_true,
                                 std::span<const double> theta_est) {
  if (theta_true.size() != theta_est.size()) {
    throw InvalidArgument("rating vectors differ in length");
  }
  if (theta_true.size() < 2) {
    throw InvalidArgument("recovery metrics need at least two ratings");
  }
  const auto rt = average_ranks(theta_true);
  const auto re = average_ranks(theta_est);
  const double n = static_cast<double>(theta_true.size());
  const double mt = std::accumulate(theta_true.begin(), theta_true.end(), 0.0) / n;
  const double me = std::accumulate(theta_est.begin(), theta_est.end(), 0.0) / n;
  double sq = 0.0;
  for (std::size_t i = 0; i < theta_true.size(); ++i) {
    const double d = (theta_est[i] - me) - (theta_true[i] - mt);
    sq += d * d;
  }
  return {pearson(rt, re), std::sqrt(sq / n)};
}

}  // namespace kelo
