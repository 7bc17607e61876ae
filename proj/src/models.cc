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

#include "kelo/models.h"

#include <cmath>
#include <numbers>

#include "kelo/error.h"

namespace kelo {
namespace {

void check_args(double v, double sigma) {
  if (!std::isfinite(v)) {
    throw InvalidArgument("rating difference must be finite");
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("scale sigma must be a positive finite number");
  }
}

// 10^(-|z|), in (0, 1]; never overflows, underflows to 0 far in the tails.
double decay(double z) { return std::pow(10.0, -std::abs(z)); }

}  // namespace

char outcome_code(Outcome outcome) {
  switch (outcome) {
    case Outcome::kHome:
      return 'H';
    case Outcome::kDraw:
      return 'D';
    case Outcome::kAway:
      return 'A';
  }
  return '?';
}

std::optional<Outcome> parse_outcome(std::string_view code) {
  if (code == "H") return Outcome::kHome;
  if (code == "D") return Outcome::kDraw;
  if (code == "A") return Outcome::kAway;
  return std::nullopt;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::kBinaryLogistic:
      return "binary";
    case Family::kEloImplicit:
      return "elo-implicit";
    case Family::kThreshold:
      return "threshold";
    case Family::kDavidson:
      return "davidson";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "binary") return Family::kBinaryLogistic;
  if (name == "elo-implicit") return Family::kEloImplicit;
  if (name == "threshold") return Family::kThreshold;
  if (name == "davidson") return Family::kDavidson;
  throw InvalidArgument("unknown model family '" + std::string(name) + "'");
}

double ModelParams::sigma_prime() const { return sigma * std::numbers::log10e; }

void ModelParams::validate() const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw InvalidArgument("sigma must be a positive finite number");
  }
  if (!(kappa >= 0.0) || !std::isfinite(kappa)) {
    throw InvalidArgument("kappa must be a non-negative finite number");
  }
  if (!(eta >= 0.0) || !std::isfinite(eta)) {
    throw InvalidArgument("eta must be a non-negative finite number");
  }
  if (!(v0 >= 0.0) || !std::isfinite(v0)) {
    throw InvalidArgument("v0 must be a non-negative finite number");
  }
}

double logistic_cdf(double v, double sigma) {
  check_args(v, sigma);
  const double t = decay(v / sigma);
  return v >= 0.0 ? 1.0 / (1.0 + t) : t / (1.0 + t);
}

double f_kappa(double v, const ModelParams& params) {
  check_args(v, params.sigma);
  params.validate();
  // Numerator and denominator divided through by 10^(|v|/2s).
  const double t = decay(0.5 * v / params.sigma);
  const double den = 1.0 + t * t + params.kappa * t;
  const double half_draw = 0.5 * params.kappa * t;
  return v >= 0.0 ? (1.0 + half_draw) / den : (t * t + half_draw) / den;
}

OutcomeProbs davidson_probs(double v, const ModelParams& params) {
  check_args(v, params.sigma);
  params.validate();
  const double t = decay(0.5 * v / params.sigma);
  const double den = 1.0 + t * t + params.kappa * t;
  const double strong = 1.0 / den;
  const double weak = t * t / den;
  const double draw = params.kappa * t / den;
  return v >= 0.0 ? OutcomeProbs{strong, weak, draw}
                  : OutcomeProbs{weak, strong, draw};
}

OutcomeProbs elo_implicit_probs(double v, const ModelParams& params) {
  const double p = logistic_cdf(v, params.sigma);
  const double q = logistic_cdf(-v, params.sigma);
  return {p * p, q * q, 2.0 * p * q};
}

OutcomeProbs threshold_probs(double v, const ModelParams& params) {
  check_args(v, params.sigma);
  params.validate();
  const double s = params.sigma;
  const double v0 = params.v0;
  // Evaluated in the lower tail so the difference does not cancel.
  const double a = std::abs(v);
  const double draw = logistic_cdf(v0 - a, s) - logistic_cdf(-a - v0, s);
  return {logistic_cdf(v - v0, s), logistic_cdf(-v - v0, s), draw};
}

OutcomeProbs binary_probs(double v, const ModelParams& params) {
  return {logistic_cdf(v, params.sigma), logistic_cdf(-v, params.sigma), 0.0};
}

double apply_home_advantage(double v, const ModelParams& params) {
  return v + params.eta * params.sigma;
}

OutcomeProbs predict_probs(double v, const ModelParams& params) {
  params.validate();
  const double shifted = apply_home_advantage(v, params);
  switch (params.family) {
    case Family::kBinaryLogistic:
      return binary_probs(shifted, params);
    case Family::kEloImplicit:
      return elo_implicit_probs(shifted, params);
    case Family::kThreshold:
      return threshold_probs(shifted, params);
    case Family::kDavidson:
      return davidson_probs(shifted, params);
  }
  throw InvalidArgument("unknown model family");
}

}  // namespace kelo
