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

#ifndef KELO_CLI_H_
#define KELO_CLI_H_

// The `kelo` command line: rate, evaluate, sweep, fit, simulate, stats.
// The experiment functions are exposed so that tests can drive them without
// going through argv.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kelo/data.h"
#include "kelo/engine.h"
#include "kelo/evaluation.h"

namespace kelo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitNumeric = 4,
};

enum class OutputFormat { kJson, kCsv };

// Defaults are the headline configuration: sigma 600, K~ 0.125, eta 0.3,
// kappa 0.7, check-kappa 1, second-half evaluation window.
EngineConfig default_engine_config();

struct SeasonEvaluation {
  EvalReport engine;
  std::optional<EvalReport> bookmaker;  // when every scored game has odds
};

// Runs the online rating over the whole season and scores the pre-game
// predictions in `window`. With require_bookmaker, missing odds in the window
// raise a DataError listing the offending rows.
SeasonEvaluation evaluate_season(const Dataset& dataset,
                                 const EngineConfig& config,
                                 EvalWindow window = EvalWindow::kSecondHalf,
                                 bool require_bookmaker = false);

struct SweepCell {
  EngineMode mode = EngineMode::kKappaElo;
  double kappa = 0.0;  // kappa for kappa-elo, check-kappa for elo-check-kappa
  double eta = 0.0;
};

struct SweepRow {
  SweepCell cell;
  std::optional<EvalReport> report;
  std::string error;  // set instead of report when the cell failed
};

// Evaluates every cell independently, up to `jobs` at a time. Rows come back
// in cell order.
std::vector<SweepRow> run_sweep(const Dataset& dataset,
                                const EngineConfig& base,
                                const std::vector<SweepCell>& cells,
                                EvalWindow window, std::size_t jobs);

// Cells for the product etas x kappas x modes; elo ignores kappa and gets one
// cell per eta.
std::vector<SweepCell> sweep_grid(const std::vector<double>& etas,
                                  const std::vector<double>& kappas,
                                  const std::vector<EngineMode>& modes);

// Six significant digits, as printed in every CSV and JSON output.
std::string format_number(double x);

// Entry point: returns the process exit code. Regular output goes to `out`,
// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace kelo::cli

#endif  // KELO_CLI_H_
