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

#include "kelo/cli.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "kelo/error.h"
#include "kelo/sim.h"

namespace kelo::cli {
namespace {

using nlohmann::json;

// Flags shared by every subcommand.
struct CommonOptions {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string window = "second-half";
  std::string mode = "kappa-elo";
  std::string family = "davidson";
  double sigma = 600.0;
  double k_step = 0.125;
  double kappa = 0.7;
  double eta = 0.3;
  double check_kappa = 1.0;
  double v0 = 0.0;
  double initial_rating = 0.0;
};

void add_model_flags(CLI::App& cmd, CommonOptions& o) {
  cmd.add_option("--sigma", o.sigma, "Rating scale")->capture_default_str();
  cmd.add_option("--kappa", o.kappa, "Draw parameter")->capture_default_str();
  cmd.add_option("--eta", o.eta, "Home advantage, in units of sigma")
      ->capture_default_str();
  cmd.add_option("--v0", o.v0, "Threshold-model parameter")
      ->capture_default_str();
}

void add_engine_flags(CLI::App& cmd, CommonOptions& o) {
  add_model_flags(cmd, o);
  cmd.add_option("--k-step", o.k_step, "Normalized step K~ (K = K~ sigma)")
      ->capture_default_str();
  cmd.add_option("--check-kappa", o.check_kappa,
                 "Prediction-only kappa of elo-check-kappa")
      ->capture_default_str();
  cmd.add_option("--mode", o.mode, "elo | kappa-elo | elo-check-kappa")
      ->capture_default_str();
  cmd.add_option("--initial-rating", o.initial_rating, "Starting rating")
      ->capture_default_str();
}

void add_io_flags(CLI::App& cmd, CommonOptions& o, bool needs_input = true) {
  if (needs_input) {
    cmd.add_option("input", o.input, "Season file (football-data CSV)")
        ->required();
  }
  cmd.add_option("-o,--output", o.output, "Output file (default: stdout)");
  cmd.add_option("--format", o.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

OutputFormat format_of(const CommonOptions& o) {
  return o.format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
}

EvalWindow window_of(const CommonOptions& o) {
  if (o.window == "second-half") return EvalWindow::kSecondHalf;
  if (o.window == "full") return EvalWindow::kFull;
  throw InvalidArgument("unknown evaluation window '" + o.window + "'");
}

ModelParams model_of(const CommonOptions& o) {
  ModelParams m{o.sigma, o.kappa, o.eta, o.v0, parse_family(o.family)};
  m.validate();
  return m;
}

EngineConfig engine_of(const CommonOptions& o) {
  EngineConfig c;
  c.k_tilde = o.k_step;
  c.model = {o.sigma, o.kappa, o.eta, o.v0, Family::kDavidson};
  c.mode = parse_mode(o.mode);
  c.check_kappa = o.check_kappa;
  c.initial_rating = o.initial_rating;
  c.validate();
  return c;
}

// Rounds to the printed precision so JSON and CSV carry the same values.
double printed(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return printed(x);
}

json config_json(const EngineConfig& c) {
  return {{"sigma", number(c.model.sigma)},
          {"k_step", number(c.k_tilde)},
          {"kappa", number(c.model.kappa)},
          {"eta", number(c.model.eta)},
          {"check_kappa", number(c.check_kappa)},
          {"mode", mode_name(c.mode)},
          {"initial_rating", number(c.initial_rating)}};
}

json report_json(const EvalReport& r) {
  return {{"mean_ls", number(r.mean_ls)},
          {"ls_low", number(r.interval.low)},
          {"ls_high", number(r.interval.high)},
          {"n_scored", r.per_game_ls.size()}};
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

// Writes to the named file, or to `fallback` when the name is empty.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
      stream_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw DataError("cannot write '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

std::string mode_kappa_label(const EngineConfig& c) {
  return c.mode == EngineMode::kKappaElo ? format_number(c.model.kappa)
                                         : std::string();
}

// ---- rate ----------------------------------------------------------------

struct RateOptions {
  std::string trajectory;
};

int cmd_rate(const CommonOptions& o, const RateOptions& r, std::ostream& out,
             std::ostream& err) {
  const auto config = engine_of(o);
  const auto dataset = load_matches(o.input);
  if (dataset.n_games() == 0) err << "warning: " << o.input << " has no games\n";
  const auto run = run_season(dataset.games, config, dataset.n_teams());

  std::vector<TeamId> order(dataset.n_teams());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](TeamId a, TeamId b) {
    return run.final_state.rating(a) > run.final_state.rating(b);
  });

  if (!r.trajectory.empty()) {
    Sink traj(r.trajectory, out);
    *traj << "game_index,team,rating\n";
    for (TeamId m = 0; m < dataset.n_teams(); ++m) {
      *traj << 0 << ',' << csv_escape(dataset.teams[m]) << ','
            << format_number(config.initial_rating) << '\n';
    }
    for (std::size_t l = 0; l < run.trajectory.size(); ++l) {
      for (TeamId m = 0; m < dataset.n_teams(); ++m) {
        *traj << l + 1 << ',' << csv_escape(dataset.teams[m]) << ','
              << format_number(run.trajectory[l][m]) << '\n';
      }
    }
  }

  Sink sink(o.output, out);
  if (format_of(o) == OutputFormat::kCsv) {
    *sink << "rank,team,rating\n";
    for (std::size_t i = 0; i < order.size(); ++i) {
      *sink << i + 1 << ',' << csv_escape(dataset.teams[order[i]]) << ','
            << format_number(run.final_state.rating(order[i])) << '\n';
    }
    return kExitOk;
  }
  json ratings = json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    ratings.push_back({{"rank", i + 1},
                       {"team", dataset.teams[order[i]]},
                       {"rating", number(run.final_state.rating(order[i]))}});
  }
  json doc{{"command", "rate"},
           {"input", o.input},
           {"n_games", dataset.n_games()},
           {"n_teams", dataset.n_teams()},
           {"config", config_json(config)},
           {"ratings", ratings},
           {"trajectory", r.trajectory.empty() ? json(nullptr)
                                               : json(r.trajectory)}};
  *sink << doc.dump(2) << '\n';
  return kExitOk;
}

// ---- evaluate ------------------------------------------------------------

struct EvaluateOptions {
  bool baseline = false;
};

void evaluation_csv_row(std::ostream& out, const std::string& predictor,
                        const EngineConfig* c, const EvalReport& r) {
  out << predictor << ',';
  if (c) {
    out << mode_name(c->mode) << ',' << mode_kappa_label(*c) << ','
        << (c->mode == EngineMode::kEloWithCheckKappa
                ? format_number(c->check_kappa)
                : std::string())
        << ',' << format_number(c->model.eta) << ','
        << format_number(c->k_tilde) << ',' << format_number(c->model.sigma);
  } else {
    out << ",,,,,";
  }
  out << ',' << format_number(r.mean_ls) << ',' << format_number(r.interval.low)
      << ',' << format_number(r.interval.high) << ',' << r.window_begin << ','
      << r.window_end << ',' << r.per_game_ls.size() << '\n';
}

int cmd_evaluate(const CommonOptions& o, const EvaluateOptions& e,
                 std::ostream& out) {
  const auto config = engine_of(o);
  const auto window = window_of(o);
  const auto dataset = load_matches(o.input);
  const auto result = evaluate_season(dataset, config, window, e.baseline);

  Sink sink(o.output, out);
  if (format_of(o) == OutputFormat::kCsv) {
    *sink << "predictor,mode,kappa,check_kappa,eta,k_step,sigma,mean_ls,"
             "ls_low,ls_high,window_begin,window_end,n_scored\n";
    evaluation_csv_row(*sink, "engine", &config, result.engine);
    if (result.bookmaker) {
      evaluation_csv_row(*sink, "bet365", nullptr, *result.bookmaker);
    }
    return kExitOk;
  }
  json doc{{"command", "evaluate"},
           {"input", o.input},
           {"n_games", dataset.n_games()},
           {"config", config_json(config)},
           {"window",
            {{"name", o.window},
             {"begin", result.engine.window_begin},
             {"end", result.engine.window_end}}},
           {"engine", report_json(result.engine)},
           {"bookmaker", result.bookmaker ? report_json(*result.bookmaker)
                                          : json(nullptr)}};
  *sink << doc.dump(2) << '\n';
  return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

struct SweepOptions {
  std::vector<double> etas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  std::vector<double> kappas{0.4, 0.7, 1.0, 2.0};
  std::vector<std::string> modes{"kappa-elo"};
  std::size_t jobs = 0;
  std::string season;
};

int cmd_sweep(const CommonOptions& o, const SweepOptions& s,
              std::ostream& out) {
  const auto base = engine_of(o);
  const auto window = window_of(o);
  std::vector<EngineMode> modes;
  for (const auto& m : s.modes) modes.push_back(parse_mode(m));
  const auto cells = sweep_grid(s.etas, s.kappas, modes);
  const auto dataset = load_matches(o.input);
  const std::size_t jobs =
      s.jobs > 0 ? s.jobs
                 : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const auto rows = run_sweep(dataset, base, cells, window, jobs);
  const std::string season = s.season.empty() ? o.input : s.season;

  Sink sink(o.output, out);
  if (format_of(o) == OutputFormat::kCsv) {
    *sink << "season,mode,kappa,eta,mean_ls,ls_low,ls_high,error\n";
    for (const auto& row : rows) {
      *sink << csv_escape(season) << ',' << mode_name(row.cell.mode) << ','
            << (row.cell.mode == EngineMode::kEloClassic
                    ? std::string()
                    : format_number(row.cell.kappa))
            << ',' << format_number(row.cell.eta) << ',';
      if (row.report) {
        *sink << format_number(row.report->mean_ls) << ','
              << format_number(row.report->interval.low) << ','
              << format_number(row.report->interval.high) << ",\n";
      } else {
        *sink << ",,," << csv_escape(row.error) << '\n';
      }
    }
    return kExitOk;
  }
  json items = json::array();
  for (const auto& row : rows) {
    json item{{"mode", mode_name(row.cell.mode)},
              {"kappa", row.cell.mode == EngineMode::kEloClassic
                            ? json(nullptr)
                            : number(row.cell.kappa)},
              {"eta", number(row.cell.eta)}};
    if (row.report) {
      item.update(report_json(*row.report));
      item["error"] = nullptr;
    } else {
      item["error"] = row.error;
    }
    items.push_back(std::move(item));
  }
  json doc{{"command", "sweep"},
           {"season", season},
           {"config", config_json(base)},
           {"rows", items}};
  *sink << doc.dump(2) << '\n';
  return kExitOk;
}

// ---- fit -----------------------------------------------------------------

int cmd_fit(const CommonOptions& o, const FitOptions& f, std::ostream& out,
            std::ostream& err) {
  const auto model = model_of(o);
  const auto dataset = load_matches(o.input);
  const auto fit = batch_ml_fit(dataset.games, model, dataset.n_teams(), f);
  if (!fit.converged) {
    err << "error: no convergence after " << fit.iterations
        << " iterations (max |gradient| " << format_number(fit.gradient_norm)
        << ")\n";
  }

  Sink sink(o.output, out);
  if (format_of(o) == OutputFormat::kCsv) {
    *sink << "team,rating,objective,gradient_norm,iterations,converged\n";
    for (TeamId m = 0; m < dataset.n_teams(); ++m) {
      *sink << csv_escape(dataset.teams[m]) << ',' << format_number(fit.theta[m])
            << ',' << format_number(fit.objective) << ','
            << format_number(fit.gradient_norm) << ',' << fit.iterations << ','
            << (fit.converged ? "true" : "false") << '\n';
    }
  } else {
    json ratings = json::array();
    for (TeamId m = 0; m < dataset.n_teams(); ++m) {
      ratings.push_back(
          {{"team", dataset.teams[m]}, {"rating", number(fit.theta[m])}});
    }
    json doc{{"command", "fit"},
             {"input", o.input},
             {"family", family_name(model.family)},
             {"sigma", number(model.sigma)},
             {"kappa", number(model.kappa)},
             {"eta", number(model.eta)},
             {"v0", number(model.v0)},
             {"ratings", ratings},
             {"objective", number(fit.objective)},
             {"gradient_norm", number(fit.gradient_norm)},
             {"iterations", fit.iterations},
             {"converged", fit.converged}};
    *sink << doc.dump(2) << '\n';
  }
  return fit.converged ? kExitOk : kExitNumeric;
}

// ---- simulate ------------------------------------------------------------

struct SimulateOptions {
  std::size_t teams = 20;
  std::size_t rounds = 1;
  double spacing = 0.1;
  std::vector<double> ratings;
  std::uint64_t seed = 1;
  std::string truth;
};

int cmd_simulate(const CommonOptions& o, const SimulateOptions& s,
                 std::ostream& out, std::ostream& err) {
  SimSpec spec;
  spec.model = model_of(o);
  spec.rounds = s.rounds;
  spec.seed = s.seed;
  if (!s.ratings.empty()) {
    spec.theta_true = s.ratings;
  } else {
    const double mid = 0.5 * (static_cast<double>(s.teams) - 1.0);
    for (std::size_t m = 0; m < s.teams; ++m) {
      spec.theta_true.push_back(s.spacing * o.sigma *
                                (static_cast<double>(m) - mid));
    }
  }
  const auto season = generate_season(spec);
  {
    Sink sink(o.output, out);
    write_matches(season.dataset, *sink);
  }
  std::string truth = s.truth;
  if (truth.empty() && !o.output.empty()) truth = o.output + ".truth.csv";
  if (truth.empty()) {
    err << "note: no --truth file given, ground-truth ratings not written\n";
  } else {
    Sink sink(truth, out);
    *sink << "team,rating\n";
    for (TeamId m = 0; m < season.dataset.n_teams(); ++m) {
      *sink << season.dataset.teams[m] << ','
            << format_number(season.theta_true[m]) << '\n';
    }
  }
  return kExitOk;
}

// ---- stats ---------------------------------------------------------------

int cmd_stats(const CommonOptions& o, std::ostream& out) {
  const auto dataset = load_matches(o.input);
  const auto s = empirical_stats(dataset.games);
  Sink sink(o.output, out);
  if (format_of(o) == OutputFormat::kCsv) {
    *sink << "n_games,p_home,p_away,p_draw,delta,kappa_bar\n"
          << s.n_games << ',' << format_number(s.p_home) << ','
          << format_number(s.p_away) << ',' << format_number(s.p_draw) << ','
          << format_number(s.delta) << ','
          << (s.kappa_infinite ? std::string("inf") : format_number(s.kappa))
          << '\n';
    return kExitOk;
  }
  json doc{{"command", "stats"},
           {"input", o.input},
           {"n_games", s.n_games},
           {"p_home", number(s.p_home)},
           {"p_away", number(s.p_away)},
           {"p_draw", number(s.p_draw)},
           {"delta", number(s.delta)},
           {"kappa_bar", number(s.kappa)},
           {"kappa_bar_infinite", s.kappa_infinite}};
  *sink << doc.dump(2) << '\n';
  return kExitOk;
}

}  // namespace

EngineConfig default_engine_config() { return engine_of(CommonOptions{}); }

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x == 0.0 ? 0.0 : x);
  return buf;
}

SeasonEvaluation evaluate_season(const Dataset& dataset,
                                 const EngineConfig& config, EvalWindow window,
                                 bool require_bookmaker) {
  const auto run = run_season(dataset.games, config, dataset.n_teams());
  SeasonEvaluation result;
  try {
    result.engine = evaluate_predictions(run.predictions, dataset.games, window);
  } catch (const ZeroProbabilityError& e) {
    throw ZeroProbabilityError(
        std::string(e.what()) + " by " + mode_name(config.mode) + " (kappa " +
            format_number(config.mode == EngineMode::kEloWithCheckKappa
                              ? config.check_kappa
                              : config.model.kappa) +
            ")",
        e.game_index());
  }

  std::vector<std::size_t> missing;
  for (std::size_t l = result.engine.window_begin;
       l < result.engine.window_end; ++l) {
    if (!dataset.games[l].odds) missing.push_back(l);
  }
  if (missing.empty()) {
    std::vector<OutcomeProbs> odds_probs;
    odds_probs.reserve(dataset.n_games());
    for (const auto& g : dataset.games) {
      odds_probs.push_back(g.odds ? odds_to_probs(*g.odds)
                                  : OutcomeProbs{1.0 / 3, 1.0 / 3, 1.0 / 3});
    }
    result.bookmaker = evaluate_predictions(odds_probs, dataset.games, window);
  } else if (require_bookmaker) {
    std::string rows;
    for (std::size_t i = 0; i < missing.size() && i < 20; ++i) {
      rows += (i ? ", " : "") + std::to_string(missing[i] + 1);
    }
    if (missing.size() > 20) rows += ", ...";
    throw DataError("bookmaker baseline requested but " +
                    std::to_string(missing.size()) +
                    " evaluated games have no odds (games " + rows + ")");
  }
  return result;
}

std::vector<SweepCell> sweep_grid(const std::vector<double>& etas,
                                  const std::vector<double>& kappas,
                                  const std::vector<EngineMode>& modes) {
  std::vector<SweepCell> cells;
  for (EngineMode mode : modes) {
    for (double eta : etas) {
      if (mode == EngineMode::kEloClassic) {
        cells.push_back({mode, 0.0, eta});
        continue;
      }
      for (double kappa : kappas) cells.push_back({mode, kappa, eta});
    }
  }
  return cells;
}

std::vector<SweepRow> run_sweep(const Dataset& dataset,
                                const EngineConfig& base,
                                const std::vector<SweepCell>& cells,
                                EvalWindow window, std::size_t jobs) {
  std::vector<SweepRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      SweepRow& row = rows[i];
      row.cell = cells[i];
      try {
        EngineConfig c = base;
        c.mode = cells[i].mode;
        c.model.eta = cells[i].eta;
        if (c.mode == EngineMode::kKappaElo) c.model.kappa = cells[i].kappa;
        if (c.mode == EngineMode::kEloWithCheckKappa) {
          c.check_kappa = cells[i].kappa;
        }
        c.validate();
        row.report = evaluate_season(dataset, c, window).engine;
      } catch (const std::exception& e) {
        row.error = e.what();
      }
    }
  };
  const std::size_t n = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, cells.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"kelo: Elo and kappa-Elo ratings for win/draw/loss games"};
  app.require_subcommand(1);

  CommonOptions o;
  RateOptions rate_opts;
  EvaluateOptions eval_opts;
  SweepOptions sweep_opts;
  FitOptions fit_opts;
  SimulateOptions sim_opts;

  auto* rate = app.add_subcommand("rate", "Final ratings and trajectory");
  add_io_flags(*rate, o);
  add_engine_flags(*rate, o);
  rate->add_option("--trajectory", rate_opts.trajectory,
                   "CSV file for (game_index, team, rating)");

  auto* evaluate =
      app.add_subcommand("evaluate", "Logarithmic score of pre-game forecasts");
  add_io_flags(*evaluate, o);
  add_engine_flags(*evaluate, o);
  evaluate->add_option("--window", o.window, "second-half | full")
      ->capture_default_str();
  evaluate->add_flag("--baseline", eval_opts.baseline,
                     "Require the Bet365 baseline (odds on every scored game)");

  auto* sweep = app.add_subcommand("sweep", "Score over an eta x kappa x mode grid");
  add_io_flags(*sweep, o);
  add_engine_flags(*sweep, o);
  sweep->add_option("--window", o.window, "second-half | full")
      ->capture_default_str();
  sweep->add_option("--etas", sweep_opts.etas, "Comma-separated eta values")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--kappas", sweep_opts.kappas,
                    "Comma-separated kappa (or check-kappa) values")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--modes", sweep_opts.modes, "Comma-separated modes")
      ->delimiter(',')
      ->capture_default_str();
  sweep->add_option("--jobs", sweep_opts.jobs,
                    "Concurrent cells (default: hardware threads)");
  sweep->add_option("--season", sweep_opts.season,
                    "Season label for the output (default: input path)");

  auto* fit = app.add_subcommand("fit", "Batch maximum-likelihood ratings");
  add_io_flags(*fit, o);
  add_model_flags(*fit, o);
  fit->add_option("--family", o.family,
                  "binary | elo-implicit | threshold | davidson")
      ->capture_default_str();
  fit->add_option("--max-iters", fit_opts.max_iters)->capture_default_str();
  fit->add_option("--tol", fit_opts.tol, "Gradient tolerance, units of 1/sigma'")
      ->capture_default_str();
  fit->add_option("--ridge", fit_opts.ridge, "Ridge penalty weight")
      ->capture_default_str();
  fit->add_option("--step", fit_opts.step, "Descent step (0: automatic)")
      ->capture_default_str();

  auto* simulate =
      app.add_subcommand("simulate", "Synthetic season in the football-data layout");
  add_io_flags(*simulate, o, /*needs_input=*/false);
  add_model_flags(*simulate, o);
  simulate->add_option("--family", o.family,
                       "binary | elo-implicit | threshold | davidson")
      ->capture_default_str();
  simulate->add_option("--teams", sim_opts.teams)->capture_default_str();
  simulate->add_option("--rounds", sim_opts.rounds, "Double round-robins")
      ->capture_default_str();
  simulate->add_option("--spacing", sim_opts.spacing,
                       "Gap between consecutive true ratings, units of sigma")
      ->capture_default_str();
  simulate->add_option("--ratings", sim_opts.ratings,
                       "Explicit comma-separated true ratings")
      ->delimiter(',');
  simulate->add_option("--seed", sim_opts.seed)->capture_default_str();
  simulate->add_option("--truth", sim_opts.truth,
                       "Ground-truth ratings file (default: <output>.truth.csv)");

  auto* stats = app.add_subcommand("stats", "Outcome frequencies and implied kappa");
  add_io_flags(*stats, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rate) return cmd_rate(o, rate_opts, out, err);
    if (*evaluate) return cmd_evaluate(o, eval_opts, out);
    if (*sweep) return cmd_sweep(o, sweep_opts, out);
    if (*fit) return cmd_fit(o, fit_opts, out, err);
    if (*simulate) return cmd_simulate(o, sim_opts, out, err);
    if (*stats) return cmd_stats(o, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitUsage;
}

}  // namespace kelo::cli
