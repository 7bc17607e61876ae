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
#include <vector>

#include "doctest.h"
#include "kelo/error.h"

namespace kelo {
namespace {

constexpr double kTight = 1e-12;

ModelParams davidson(double kappa, double sigma = 600.0, double eta = 0.0) {
  return {sigma, kappa, eta, 0.0, Family::kDavidson};
}

double sum(const OutcomeProbs& p) { return p.home + p.away + p.draw; }

std::vector<double> v_grid(double sigma) {
  std::vector<double> grid;
  for (int i = -50; i <= 50; ++i) grid.push_back(i * sigma / 10.0);
  return grid;
}

const double kKappas[] = {0.0, 0.4, 0.7, 1.0, 2.0};

std::vector<ModelParams> all_families(double kappa, double sigma = 600.0) {
  return {{sigma, kappa, 0.0, 0.0, Family::kBinaryLogistic},
          {sigma, kappa, 0.0, 0.0, Family::kEloImplicit},
          {sigma, kappa, 0.0, 0.3 * sigma, Family::kThreshold},
          {sigma, kappa, 0.0, 0.0, Family::kDavidson}};
}

TEST_CASE("logistic_cdf closed-form values") {
  CHECK(logistic_cdf(0.0, 600.0) == 0.5);
  CHECK(logistic_cdf(600.0, 600.0) == doctest::Approx(10.0 / 11.0).epsilon(kTight));
  CHECK(logistic_cdf(-600.0, 600.0) == doctest::Approx(1.0 / 11.0).epsilon(kTight));
  CHECK(logistic_cdf(1e6, 600.0) == 1.0);
  CHECK(logistic_cdf(-1e6, 600.0) == 0.0);
}

TEST_CASE("logistic_cdf rejects bad arguments") {
  CHECK_THROWS_AS(logistic_cdf(0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(logistic_cdf(0.0, -1.0), InvalidArgument);
  CHECK_THROWS_AS(logistic_cdf(NAN, 600.0), InvalidArgument);
  CHECK_THROWS_AS(logistic_cdf(INFINITY, 600.0), InvalidArgument);
}

TEST_CASE("logistic_cdf is increasing and complementary") {
  double prev = -1.0;
  for (double v : v_grid(600.0)) {
    const double p = logistic_cdf(v, 600.0);
    CHECK(p > prev);
    prev = p;
    CHECK(std::abs(p + logistic_cdf(-v, 600.0) - 1.0) < kTight);
  }
}

TEST_CASE("f_kappa examples") {
  for (double k : kKappas) CHECK(f_kappa(0.0, davidson(k)) == 0.5);
  for (double v : v_grid(600.0)) {
    CHECK(std::abs(f_kappa(v, davidson(0.0)) - logistic_cdf(v, 600.0)) < kTight);
  }
  // F_2(v; s) = Phi(v; 2s); both sides evaluated from their own formulas.
  const double x = std::pow(10.0, 0.5);
  const double direct = (x + 1.0) / (x + 1.0 / x + 2.0);
  CHECK(f_kappa(600.0, davidson(2.0)) == doctest::Approx(direct).epsilon(kTight));
  CHECK(logistic_cdf(600.0, 1200.0) == doctest::Approx(direct).epsilon(kTight));
  CHECK(direct == doctest::Approx(0.759747).epsilon(1e-6));
}

TEST_CASE("f_kappa antisymmetry") {
  for (double k : kKappas) {
    for (double v : v_grid(600.0)) {
      CHECK(std::abs(f_kappa(v, davidson(k)) + f_kappa(-v, davidson(k)) - 1.0) <
            kTight);
    }
  }
}

TEST_CASE("davidson_probs examples") {
  auto p = davidson_probs(0.0, davidson(2.0));
  CHECK(p.home == 0.25);
  CHECK(p.away == 0.25);
  CHECK(p.draw == 0.5);

  p = davidson_probs(0.0, davidson(0.0));
  CHECK(p.home == 0.5);
  CHECK(p.away == 0.5);
  CHECK(p.draw == 0.0);

  const double x = std::sqrt(10.0);
  const double den = x + 1.0 / x + 1.0;
  p = davidson_probs(600.0, davidson(1.0));
  CHECK(p.home == doctest::Approx(x / den).epsilon(kTight));
  CHECK(p.away == doctest::Approx((1.0 / x) / den).epsilon(kTight));
  CHECK(p.draw == doctest::Approx(1.0 / den).epsilon(kTight));
  CHECK(p.home == doctest::Approx(0.706101).epsilon(1e-6));
  CHECK(p.away == doctest::Approx(0.0706101).epsilon(1e-6));
  CHECK(p.draw == doctest::Approx(0.223289).epsilon(1e-6));
  CHECK(std::abs(sum(p) - 1.0) < kTight);
  CHECK(std::abs(p.draw - std::sqrt(p.home * p.away)) < kTight);
}

TEST_CASE("elo_implicit_probs examples") {
  const ModelParams elo{600.0, 0.0, 0.0, 0.0, Family::kEloImplicit};
  auto p = elo_implicit_probs(0.0, elo);
  CHECK(p.home == 0.25);
  CHECK(p.away == 0.25);
  CHECK(p.draw == 0.5);

  p = elo_implicit_probs(1e7, elo);
  CHECK(p.home == 1.0);
  CHECK(p.away == 0.0);
  CHECK(p.draw == 0.0);

  p = elo_implicit_probs(600.0, elo);
  CHECK(p.home == doctest::Approx(100.0 / 121.0).epsilon(kTight));
  CHECK(p.away == doctest::Approx(1.0 / 121.0).epsilon(kTight));
  CHECK(p.draw == doctest::Approx(20.0 / 121.0).epsilon(kTight));
  CHECK(std::abs(sum(p) - 1.0) < kTight);
}

TEST_CASE("threshold_probs examples") {
  ModelParams t{600.0, 0.0, 0.0, 0.0, Family::kThreshold};
  auto p = threshold_probs(0.0, t);
  CHECK(p.home == 0.5);
  CHECK(p.away == 0.5);
  CHECK(p.draw == 0.0);

  t.v0 = 600.0;
  p = threshold_probs(0.0, t);
  CHECK(p.home == doctest::Approx(1.0 / 11.0).epsilon(kTight));
  CHECK(p.away == doctest::Approx(1.0 / 11.0).epsilon(kTight));
  CHECK(p.draw == doctest::Approx(9.0 / 11.0).epsilon(kTight));

  t.v0 = 300.0;
  p = threshold_probs(300.0, t);
  CHECK(p.home == 0.5);
  CHECK(p.away == doctest::Approx(1.0 / 11.0).epsilon(kTight));
  CHECK(p.draw == doctest::Approx(0.5 - 1.0 / 11.0).epsilon(kTight));
}

TEST_CASE("apply_home_advantage") {
  CHECK(apply_home_advantage(0.0, davidson(1.0, 600.0, 0.3)) ==
        doctest::Approx(180.0).epsilon(kTight));
  CHECK(apply_home_advantage(100.0, davidson(1.0, 600.0, 0.0)) == 100.0);
  CHECK(std::abs(apply_home_advantage(-180.0, davidson(1.0, 600.0, 0.3))) <
        1e-12);
}

TEST_CASE("predict_probs dispatch") {
  auto p = predict_probs(0.0, davidson(2.0));
  CHECK(p.home == 0.25);
  CHECK(p.draw == 0.5);

  p = predict_probs(0.0, {600.0, 0.0, 0.0, 0.0, Family::kBinaryLogistic});
  CHECK(p.home == 0.5);
  CHECK(p.away == 0.5);
  CHECK(p.draw == 0.0);

  p = predict_probs(0.0, davidson(1.0, 600.0, 0.3));
  const auto q = davidson_probs(180.0, davidson(1.0));
  CHECK(p.home == doctest::Approx(q.home).epsilon(kTight));
  CHECK(p.away == doctest::Approx(q.away).epsilon(kTight));
  CHECK(p.draw == doctest::Approx(q.draw).epsilon(kTight));

  CHECK_THROWS_AS(predict_probs(0.0, davidson(-1.0)), InvalidArgument);
}

TEST_CASE("normalization and symmetry on the grid") {
  for (double k : kKappas) {
    for (const auto& params : all_families(k)) {
      for (double v : v_grid(params.sigma)) {
        const auto p = predict_probs(v, params);
        const auto q = predict_probs(-v, params);
        CHECK(std::abs(sum(p) - 1.0) < kTight);
        CHECK(p.home >= 0.0);
        CHECK(p.draw >= 0.0);
        CHECK(std::abs(p.home - q.away) < kTight);
        CHECK(std::abs(p.draw - q.draw) < kTight);
      }
    }
  }
}

TEST_CASE("monotonicity and draw peak at zero") {
  for (double k : {0.4, 0.7, 1.0, 2.0}) {
    for (const auto& params : all_families(k)) {
      const auto grid = v_grid(params.sigma);
      for (std::size_t i = 1; i < grid.size(); ++i) {
        const auto lo = predict_probs(grid[i - 1], params);
        const auto hi = predict_probs(grid[i], params);
        CHECK(hi.home > lo.home);
        if (params.family == Family::kBinaryLogistic) continue;
        if (grid[i] <= 0.0) CHECK(hi.draw >= lo.draw);
        if (grid[i - 1] >= 0.0) CHECK(hi.draw <= lo.draw);
      }
    }
  }
}

TEST_CASE("Davidson reductions") {
  for (double v : v_grid(600.0)) {
    CHECK(std::abs(davidson_probs(v, davidson(0.0)).home -
                   logistic_cdf(v, 600.0)) < kTight);
    const auto d = davidson_probs(v, davidson(2.0, 300.0));
    const auto e =
        elo_implicit_probs(v, {600.0, 0.0, 0.0, 0.0, Family::kEloImplicit});
    CHECK(std::abs(d.home - e.home) < kTight);
    CHECK(std::abs(d.away - e.away) < kTight);
    CHECK(std::abs(d.draw - e.draw) < kTight);
  }
}

TEST_CASE("draw dominates at equal ratings iff kappa >= 1") {
  for (double k : {1.0, 1.5, 2.0, 5.0}) {
    const auto p = davidson_probs(0.0, davidson(k));
    CHECK(p.draw >= p.home);
  }
  for (double k : {0.0, 0.4, 0.7, 0.99}) {
    const auto p = davidson_probs(0.0, davidson(k));
    CHECK(p.draw < p.home);
  }
}

TEST_CASE("scale and origin invariance") {
  for (double c : {0.25, 2.0, 7.0}) {
    for (double k : kKappas) {
      for (double v : v_grid(600.0)) {
        const auto a = davidson_probs(v, davidson(k));
        const auto b = davidson_probs(c * v, davidson(k, c * 600.0));
        CHECK(std::abs(a.home - b.home) < kTight);
        CHECK(std::abs(a.draw - b.draw) < kTight);
      }
    }
  }
  const double home = 240.0, away = -60.0;
  for (double shift : {-1000.0, 13.0, 5000.0}) {
    const auto a = davidson_probs(home - away, davidson(0.7));
    const auto b = davidson_probs((home + shift) - (away + shift), davidson(0.7));
    CHECK(std::abs(a.home - b.home) < kTight);
  }
}

TEST_CASE("extreme differences stay finite and normalized") {
  for (double v : {1e5, 1e9, -1e9, 1e300}) {
    for (const auto& params : all_families(0.7)) {
      const auto p = predict_probs(v, params);
      CHECK(std::isfinite(p.home));
      CHECK(std::isfinite(p.draw));
      CHECK(std::abs(sum(p) - 1.0) < kTight);
    }
  }
}

}  // namespace
}  // namespace kelo
