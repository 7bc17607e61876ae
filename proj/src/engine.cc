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

#include "kelo/engine.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "kelo/error.h"

namespace kelo {
namespace {

// Expected home score: 1 for a home win, 0.5 for a draw.
double home_score(Outcome outcome) { return score_of(outcome, Side::kHome); }

ModelParams davidson_with(const ModelParams& base, double kappa) {
  ModelParams params = base;
  params.kappa = kappa;
  params.family = Family::kDavidson;
  return params;
}

void check_indices(const GameRecord& game, std::size_t n, std::size_t index) {
  if (game.home >= n || game.away >= n) {
    throw InvalidArgument("game " + std::to_string(index) +
                          " references a player outside the rating vector");
  }
}

// d/dv log P(outcome | v), v already shifted by the home advantage.
double log_prob_slope(double v, Outcome outcome, const ModelParams& model,
                      std::size_t index) {
  const double sp = model.sigma_prime();
  const double s = model.sigma;
  auto zero_prob = [&] {
    return ZeroProbabilityError(
        "game " + std::to_string(index) + ": outcome " +
            outcome_code(outcome) + " has zero probability under the " +
            family_name(model.family) + " model",
        index);
  };
  switch (model.family) {
    case Family::kBinaryLogistic:
      if (outcome == Outcome::kDraw) throw zero_prob();
      return outcome == Outcome::kHome ? logistic_cdf(-v, s) / sp
                                       : -logistic_cdf(v, s) / sp;
    case Family::kDavidson:
      if (outcome == Outcome::kDraw && model.kappa == 0.0) throw zero_prob();
      return (home_score(outcome) - f_kappa(v, model)) / sp;
    case Family::kEloImplicit:
      return 2.0 * (home_score(outcome) - logistic_cdf(v, s)) / sp;
    case Family::kThreshold: {
      const double v0 = model.v0;
      switch (outcome) {
        case Outcome::kHome:
          return logistic_cdf(v0 - v, s) / sp;
        case Outcome::kAway:
          return -logistic_cdf(v + v0, s) / sp;
        case Outcome::kDraw: {
          const double p_draw = threshold_probs(v, model).draw;
          if (p_draw == 0.0) throw zero_prob();
          auto density = [&](double u) {
            return logistic_cdf(u, s) * logistic_cdf(-u, s) / sp;
          };
          return (density(v + v0) - density(v - v0)) / p_draw;
        }
      }
    }
  }
  throw InvalidArgument("unknown model family");
}

// Strong connectivity of the "did not lose to" graph: an edge a -> b for
// every game in which a beat or drew with b. The maximum likelihood estimate
// is finite iff this graph is strongly connected.
bool strongly_connected(std::span<const GameRecord> games, std::size_t n) {
  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  auto edge = [&](std::size_t a, std::size_t b) {
    fwd[a].push_back(b);
    bwd[b].push_back(a);
  };
  for (const auto& g : games) {
    if (g.outcome != Outcome::kAway) edge(g.home, g.away);
    if (g.outcome != Outcome::kHome) edge(g.away, g.home);
  }
  auto reaches_all = [n](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : adj[u]) {
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n;
  };
  return n == 0 || (reaches_all(fwd) && reaches_all(bwd));
}

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void center(std::vector<double>& v) {
  if (v.empty()) return;
  const double mean =
      std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
}

}  // namespace

std::string mode_name(EngineMode mode) {
  switch (mode) {
    case EngineMode::kEloClassic:
      return "elo";
    case EngineMode::kKappaElo:
      return "kappa-elo";
    case EngineMode::kEloWithCheckKappa:
      return "elo-check-kappa";
  }
  return "unknown";
}

EngineMode parse_mode(std::string_view name) {
  if (name == "elo") return EngineMode::kEloClassic;
  if (name == "kappa-elo") return EngineMode::kKappaElo;
  if (name == "elo-check-kappa") return EngineMode::kEloWithCheckKappa;
  throw InvalidArgument("unknown engine mode '" + std::string(name) + "'");
}

void EngineConfig::validate() const {
  model.validate();
  if (!(k_tilde >= 0.0) || !std::isfinite(k_tilde)) {
    throw InvalidArgument("k_tilde must be a non-negative finite number");
  }
  if (!(check_kappa >= 0.0) || !std::isfinite(check_kappa)) {
    throw InvalidArgument("check_kappa must be a non-negative finite number");
  }
  if (!std::isfinite(initial_rating)) {
    throw InvalidArgument("initial rating must be finite");
  }
}

double& RatingState::at(TeamId id) {
  if (id >= theta_.size()) theta_.resize(id + 1, initial_rating_);
  return theta_[id];
}

double score_of(Outcome outcome, Side side) {
  if (outcome == Outcome::kDraw) return 0.5;
  const bool home_won = outcome == Outcome::kHome;
  return (side == Side::kHome) == home_won ? 1.0 : 0.0;
}

double rating_difference(const RatingState& state, TeamId home, TeamId away) {
  return state.rating(home) - state.rating(away);
}

void sg_update(RatingState& state, const GameRecord& game,
               const EngineConfig& config) {
  const ModelParams& model = config.model;
  const double v =
      apply_home_advantage(rating_difference(state, game.home, game.away), model);
  const double expected = config.mode == EngineMode::kKappaElo
                              ? f_kappa(v, model)
                              : logistic_cdf(v, model.sigma);
  const double delta =
      config.step() * (score_of(game.outcome, Side::kHome) - expected);
  state.at(game.home) += delta;
  state.at(game.away) -= delta;
  state.count_game();
}

OutcomeProbs predict(const RatingState& state, TeamId home, TeamId away,
                     const EngineConfig& config) {
  const double v = apply_home_advantage(rating_difference(state, home, away),
                                        config.model);
  switch (config.mode) {
    case EngineMode::kKappaElo:
      return davidson_probs(v, davidson_with(config.model, config.model.kappa));
    case EngineMode::kEloClassic:
      return elo_implicit_probs(v, config.model);
    case EngineMode::kEloWithCheckKappa:
      return davidson_probs(v, davidson_with(config.model, config.check_kappa));
  }
  throw InvalidArgument("unknown engine mode");
}

SeasonRun run_season(std::span<const GameRecord> games,
                     const EngineConfig& config, std::size_t num_players) {
  config.validate();
  SeasonRun run{RatingState(num_players, config.initial_rating), {}, {}};
  run.predictions.reserve(games.size());
  run.trajectory.reserve(games.size());
  for (const auto& game : games) {
    run.predictions.push_back(
        predict(run.final_state, game.home, game.away, config));
    sg_update(run.final_state, game, config);
    const auto ratings = run.final_state.ratings();
    run.trajectory.emplace_back(ratings.begin(), ratings.end());
  }
  return run;
}

double nll(std::span<const double> theta, std::span<const GameRecord> games,
           const ModelParams& model) {
  model.validate();
  double total = 0.0;
  for (std::size_t l = 0; l < games.size(); ++l) {
    const auto& game = games[l];
    check_indices(game, theta.size(), l);
    const double v = theta[game.home] - theta[game.away];
    const double p = predict_probs(v, model).of(game.outcome);
    if (!(p > 0.0)) {
      throw ZeroProbabilityError(
          "game " + std::to_string(l) + ": outcome " +
              outcome_code(game.outcome) + " has zero probability under the " +
              family_name(model.family) + " model",
          l);
    }
    total -= std::log(p);
  }
  return total;
}

std::vector<double> nll_gradient(std::span<const double> theta,
                                 std::span<const GameRecord> games,
                                 const ModelParams& model) {
  model.validate();
  std::vector<double> grad(theta.size(), 0.0);
  for (std::size_t l = 0; l < games.size(); ++l) {
    const auto& game = games[l];
    check_indices(game, theta.size(), l);
    const double v =
        apply_home_advantage(theta[game.home] - theta[game.away], model);
    const double e = log_prob_slope(v, game.outcome, model, l);
    grad[game.home] -= e;
    grad[game.away] += e;
  }
  return grad;
}

FitResult batch_ml_fit(std::span<const GameRecord> games,
                       const ModelParams& model, std::size_t num_players,
                       const FitOptions& options) {
  model.validate();
  if (!(options.ridge >= 0.0) || !(options.tol > 0.0) ||
      !(options.step >= 0.0)) {
    throw InvalidArgument("fit options must be non-negative (tol positive)");
  }
  std::vector<std::size_t> played(num_players, 0);
  for (std::size_t l = 0; l < games.size(); ++l) {
    check_indices(games[l], num_players, l);
    if (model.family == Family::kBinaryLogistic &&
        games[l].outcome == Outcome::kDraw) {
      throw InvalidArgument("game " + std::to_string(l) +
                            " is a draw; the binary model cannot fit draws");
    }
    ++played[games[l].home];
    ++played[games[l].away];
  }
  for (std::size_t m = 0; m < num_players; ++m) {
    if (played[m] == 0) {
      throw InvalidArgument("player " + std::to_string(m) + " has no games");
    }
  }
  if (options.ridge == 0.0 && !strongly_connected(games, num_players)) {
    throw NonConvergenceError(
        "maximum likelihood ratings do not exist: some group of players never "
        "failed to beat the rest (enable the ridge penalty)");
  }

  auto objective = [&](std::span<const double> theta) {
    double value = nll(theta, games, model);
    if (options.ridge > 0.0) {
      for (double x : theta) value += options.ridge * x * x;
    }
    return value;
  };
  auto gradient = [&](std::span<const double> theta) {
    auto g = nll_gradient(theta, games, model);
    if (options.ridge > 0.0) {
      for (std::size_t m = 0; m < g.size(); ++m) {
        g[m] += 2.0 * options.ridge * theta[m];
      }
    }
    return g;
  };

  const double sp = model.sigma_prime();
  const std::size_t busiest =
      num_players == 0 ? 1 : *std::max_element(played.begin(), played.end());
  const double max_step = options.step > 0.0
                              ? options.step
                              : 1.0 / (2.0 * static_cast<double>(busiest) /
                                           (sp * sp) +
                                       2.0 * options.ridge);
  double step = max_step;

  FitResult result;
  result.theta.assign(num_players, 0.0);
  result.objective = objective(result.theta);
  auto grad = gradient(result.theta);
  std::size_t rejected = 0;
  constexpr std::size_t kMaxRejected = 10;
  for (; result.iterations < options.max_iters; ++result.iterations) {
    result.gradient_norm = max_abs(grad);
    if (result.gradient_norm < options.tol / sp) {
      result.converged = true;
      break;
    }
    std::vector<double> candidate(result.theta);
    for (std::size_t m = 0; m < num_players; ++m) {
      candidate[m] -= step * grad[m];
    }
    center(candidate);
    const double value = objective(candidate);
    // Rounding slack: near the optimum decreases fall below double precision.
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                         std::max(1.0, std::abs(result.objective));
    if (std::isfinite(value) && value <= result.objective + slack) {
      result.theta = std::move(candidate);
      result.objective = value;
      grad = gradient(result.theta);
      rejected = 0;
      step = std::min(2.0 * step, max_step);
    } else {
      step *= 0.5;
      if (++rejected >= kMaxRejected) {
        throw NonConvergenceError(
            "steepest descent diverged: objective increased on " +
            std::to_string(kMaxRejected) + " consecutive steps (iteration " +
            std::to_string(result.iterations) + ")");
      }
    }
  }
  result.gradient_norm = max_abs(grad);
  if (!result.converged) {
    result.converged = result.gradient_norm < options.tol / sp;
  }
  return result;
}

}  // namespace kelo
