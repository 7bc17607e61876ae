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

#ifndef KELO_ENGINE_H_
#define KELO_ENGINE_H_

// Online rating (Elo, kappa-Elo, Elo with a prediction-only kappa) and batch
// maximum-likelihood fitting of rating vectors.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kelo/models.h"
#include "kelo/types.h"

namespace kelo {

enum class EngineMode {
  kEloClassic,         // update with logistic_cdf, predict with Phi^2 model
  kKappaElo,           // update with f_kappa, predict with Davidson(kappa)
  kEloWithCheckKappa,  // Elo update, predict with Davidson(check_kappa)
};

std::string mode_name(EngineMode mode);
// Accepts "elo", "kappa-elo", "elo-check-kappa".
EngineMode parse_mode(std::string_view name);

struct EngineConfig {
  // Normalized step; the update step is K = k_tilde * sigma. Zero freezes the
  // ratings.
  double k_tilde = 0.125;
  // sigma, kappa and eta are used by every mode. family is ignored: the mode
  // decides which model is used.
  ModelParams model;
  EngineMode mode = EngineMode::kKappaElo;
  double check_kappa = 1.0;
  double initial_rating = 0.0;

  double step() const { return k_tilde * model.sigma; }
  void validate() const;
};

class RatingState {
 public:
  RatingState() = default;
  RatingState(std::size_t num_players, double initial_rating)
      : theta_(num_players, initial_rating), initial_rating_(initial_rating) {}

  std::size_t size() const { return theta_.size(); }
  std::span<const double> ratings() const { return theta_; }
  std::size_t games_processed() const { return games_processed_; }

  // Rating of `id`; players never seen read as the initial rating.
  double rating(TeamId id) const {
    return id < theta_.size() ? theta_[id] : initial_rating_;
  }

  // Mutable access; grows the table so that `id` exists.
  double& at(TeamId id);

  void count_game() { ++games_processed_; }

 private:
  std::vector<double> theta_;
  double initial_rating_ = 0.0;
  std::size_t games_processed_ = 0;
};

// 1 for a win, 0.5 for a draw, 0 for a loss, seen from `side`.
double score_of(Outcome outcome, Side side);

// theta_home - theta_away, before the home-advantage shift.
double rating_difference(const RatingState& state, TeamId home, TeamId away);

// One stochastic-gradient step on the game's log-likelihood term. Unknown
// players are created at config.initial_rating.
void sg_update(RatingState& state, const GameRecord& game,
               const EngineConfig& config);

// Pre-game outcome probabilities under the mode's prediction model.
OutcomeProbs predict(const RatingState& state, TeamId home, TeamId away,
                     const EngineConfig& config);

struct SeasonRun {
  RatingState final_state;
  // predictions[l] was made before game l was used for updating.
  std::vector<OutcomeProbs> predictions;
  // trajectory[l] holds all ratings after processing game l.
  std::vector<std::vector<double>> trajectory;
};

SeasonRun run_season(std::span<const GameRecord> games,
                     const EngineConfig& config, std::size_t num_players);

// Negative log-likelihood (natural log) of the games under `model`, with the
// home-advantage shift applied to every game. Throws ZeroProbabilityError if
// an observed outcome has probability zero.
double nll(std::span<const double> theta, std::span<const GameRecord> games,
           const ModelParams& model);

// Gradient of nll with respect to theta.
std::vector<double> nll_gradient(std::span<const double> theta,
                                 std::span<const GameRecord> games,
                                 const ModelParams& model);

struct FitOptions {
  // Largest steepest-descent step; 0 picks 1 / (2 d / sigma'^2 + 2 ridge), d
  // being the largest number of games played by any one player. Rejected
  // steps are halved and accepted ones doubled back up to this cap.
  double step = 0.0;
  std::size_t max_iters = 100000;
  // Stop when max |gradient| < tol / sigma'.
  double tol = 1e-9;
  // Weight of the ridge penalty ridge * |theta|^2; 0 disables it.
  double ridge = 0.0;
};

struct FitResult {
  std::vector<double> theta;  // sums to zero
  double objective = 0.0;     // nll (plus the ridge penalty, if any)
  double gradient_norm = 0.0; // max |gradient|
  std::size_t iterations = 0;
  bool converged = false;
};

// Batch maximum-likelihood ratings by projected steepest descent with
// backtracking. Throws NonConvergenceError if the maximum likelihood estimate
// does not exist (the comparison graph is not strongly connected and no ridge
// penalty is used) or if the objective cannot be decreased. Hitting max_iters
// is reported through FitResult::converged.
FitResult batch_ml_fit(std::span<const GameRecord> games,
                       const ModelParams& model, std::size_t num_players,
                       const FitOptions& options = {});

}  // namespace kelo

#endif  // KELO_ENGINE_H_
