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

#ifndef KELO_MODELS_H_
#define KELO_MODELS_H_

// Closed-form outcome models for paired comparisons with draws. Every model
// maps a rating difference v = theta_home - theta_away to the probabilities
// of a home win, an away win and a draw. All exponentials are base 10 and all
// functions are pure.

#include <string>
#include <string_view>

#include "kelo/types.h"

namespace kelo {

enum class Family {
  kBinaryLogistic,  // win/loss only, draws have probability 0
  kEloImplicit,     // Phi^2(v), Phi^2(-v), 2 Phi(v) Phi(-v)
  kThreshold,       // latent-threshold model with parameter v0
  kDavidson,        // Davidson draw model with parameter kappa
};

std::string family_name(Family family);
// Accepts "binary", "elo-implicit", "threshold", "davidson".
Family parse_family(std::string_view name);

struct ModelParams {
  double sigma = 600.0;
  double kappa = 0.0;
  double eta = 0.0;
  double v0 = 0.0;
  Family family = Family::kDavidson;

  // Natural-log scale: 10^(v/sigma) == exp(v/sigma_prime()).
  double sigma_prime() const;

  // Throws InvalidArgument unless sigma > 0 and kappa, eta, v0 are >= 0.
  void validate() const;
};

// 1 / (1 + 10^(-v/sigma)).
double logistic_cdf(double v, double sigma);

// Generalized expected score of the kappa-Elo update:
//   (10^(v/2s) + kappa/2) / (10^(v/2s) + 10^(-v/2s) + kappa).
// kappa = 0 gives logistic_cdf(v, sigma); f_kappa(v) + f_kappa(-v) = 1.
double f_kappa(double v, const ModelParams& params);

// The family-specific functions below evaluate at v directly; they do not
// apply the home-advantage shift.
OutcomeProbs davidson_probs(double v, const ModelParams& params);
OutcomeProbs elo_implicit_probs(double v, const ModelParams& params);
OutcomeProbs threshold_probs(double v, const ModelParams& params);
OutcomeProbs binary_probs(double v, const ModelParams& params);

// v + eta * sigma.
double apply_home_advantage(double v, const ModelParams& params);

// Shifts v by the home advantage and dispatches on params.family.
OutcomeProbs predict_probs(double v, const ModelParams& params);

}  // namespace kelo

#endif  // KELO_MODELS_H_
