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

#ifndef KELO_TYPES_H_
#define KELO_TYPES_H_

#include <array>
#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace kelo {

enum class Outcome { kHome, kDraw, kAway };

enum class Side { kHome, kAway };

// 'H', 'D' or 'A', as in the football-data FTR column.
char outcome_code(Outcome outcome);
std::optional<Outcome> parse_outcome(std::string_view code);

// Dense team index into a Dataset / rating vector.
using TeamId = std::size_t;

// Probabilities of the three mutually exclusive results of a game.
struct OutcomeProbs {
  double home = 0.0;
  double away = 0.0;
  double draw = 0.0;

  double of(Outcome outcome) const {
    switch (outcome) {
      case Outcome::kHome:
        return home;
      case Outcome::kAway:
        return away;
      case Outcome::kDraw:
        return draw;
    }
    return 0.0;
  }
};

// Decimal bookmaker odds, each > 1.
struct Odds {
  double home = 0.0;
  double draw = 0.0;
  double away = 0.0;
};

// One fixture. Team identities are indices into the owning Dataset's team
// table.
struct GameRecord {
  std::chrono::year_month_day date{};
  TeamId home = 0;
  TeamId away = 0;
  Outcome outcome = Outcome::kDraw;
  std::optional<Odds> odds;

  // Verbatim source text of the date and odds fields, kept so that a parsed
  // file can be written back without reformatting. Empty for synthetic games.
  std::string date_text;
  std::array<std::string, 3> odds_text;
};

}  // namespace kelo

#endif  // KELO_TYPES_H_
