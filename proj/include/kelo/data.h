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

#ifndef KELO_DATA_H_
#define KELO_DATA_H_

// Match results in the football-data.co.uk CSV layout: required columns
// Date, HomeTeam, AwayTeam, FTR; optional Bet365 odds B365H, B365D, B365A.
// Other columns are ignored.

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kelo/types.h"

namespace kelo {

struct Dataset {
  // Chronological; games on the same date keep their input order.
  std::vector<GameRecord> games;
  // Team names sorted lexicographically; GameRecord ids index this table.
  std::vector<std::string> teams;

  std::size_t n_games() const { return games.size(); }
  std::size_t n_teams() const { return teams.size(); }
  std::optional<TeamId> find_team(std::string_view name) const;
};

// A game whose teams are still names.
struct MatchRow {
  GameRecord game;  // home/away ids are ignored
  std::string home_team;
  std::string away_team;
};

// Sorts rows by date (stable), builds the team table and resolves ids.
// Throws DataError if a row has the same team on both sides.
Dataset build_dataset(std::vector<MatchRow> rows);

// Throws DataError on a missing required column or a malformed row.
Dataset parse_matches(std::istream& in);
Dataset parse_matches(std::string_view text);
Dataset load_matches(const std::string& path);

// Writes the required columns (and the odds columns, empty where absent).
// Source text of parsed dates and odds is reproduced verbatim.
void write_matches(const Dataset& dataset, std::ostream& out);

// Accepts D/M/YY and D/M/YYYY; two-digit years map to 1950..2049.
std::optional<std::chrono::year_month_day> parse_date(std::string_view text);
// DD/MM/YYYY.
std::string format_date(std::chrono::year_month_day date);

// Bookmaker probabilities: reciprocal odds normalized to sum to one.
OutcomeProbs odds_to_probs(double home, double draw, double away);
OutcomeProbs odds_to_probs(const Odds& odds);

// The +1/-1 selector of the two participants of a game.
class SchedulingVector {
 public:
  // Throws InvalidArgument if the indices coincide or are not below dim.
  SchedulingVector(TeamId home, TeamId away, std::size_t dim);

  TeamId home() const { return home_; }
  TeamId away() const { return away_; }
  std::size_t dim() const { return dim_; }

  double dot(std::span<const double> theta) const;
  std::vector<double> dense() const;

 private:
  TeamId home_;
  TeamId away_;
  std::size_t dim_;
};

}  // namespace kelo

#endif  // KELO_DATA_H_
