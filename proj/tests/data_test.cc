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

#include "kelo/data.h"

#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "kelo/error.h"
#include "kelo/evaluation.h"
#include "kelo/sim.h"

namespace kelo {
namespace {

using std::chrono::year_month_day;

constexpr const char* kHeader =
    "Div,Date,HomeTeam,AwayTeam,FTHG,FTAG,FTR,B365H,B365D,B365A\n";

std::string write(const Dataset& d) {
  std::ostringstream out;
  write_matches(d, out);
  return out.str();
}

void check_same_games(const Dataset& a, const Dataset& b) {
  REQUIRE(a.n_games() == b.n_games());
  CHECK(a.teams == b.teams);
  for (std::size_t l = 0; l < a.n_games(); ++l) {
    const auto& x = a.games[l];
    const auto& y = b.games[l];
    CHECK(x.date == y.date);
    CHECK(x.home == y.home);
    CHECK(x.away == y.away);
    CHECK(x.outcome == y.outcome);
    REQUIRE(x.odds.has_value() == y.odds.has_value());
    if (x.odds) {
      CHECK(x.odds->home == y.odds->home);
      CHECK(x.odds->draw == y.odds->draw);
      CHECK(x.odds->away == y.odds->away);
    }
  }
}

TEST_CASE("parse a single row") {
  const auto d = parse_matches(
      "Date,HomeTeam,AwayTeam,FTR,B365H,B365D,B365A\n"
      "12/08/2017,Arsenal,Leicester,H,1.53,4.5,6.5\n");
  REQUIRE(d.n_games() == 1);
  CHECK(d.n_teams() == 2);
  const auto& g = d.games[0];
  CHECK(g.outcome == Outcome::kHome);
  CHECK(d.teams[g.home] == "Arsenal");
  CHECK(d.teams[g.away] == "Leicester");
  CHECK(g.date == year_month_day{std::chrono::year{2017}, std::chrono::August,
                                 std::chrono::day{12}});
  REQUIRE(g.odds);
  CHECK(g.odds->home == 1.53);
  CHECK(g.odds->draw == 4.5);
  CHECK(g.odds->away == 6.5);
}

TEST_CASE("empty input and header only give an empty dataset") {
  CHECK(parse_matches("").n_games() == 0);
  const auto d = parse_matches(std::string(kHeader));
  CHECK(d.n_games() == 0);
  CHECK(d.n_teams() == 0);
}

TEST_CASE("schema and row errors") {
  CHECK_THROWS_WITH_AS(parse_matches("Date,HomeTeam,FTR\n"),
                       doctest::Contains("AwayTeam"), DataError);
  try {
    parse_matches(std::string(kHeader) +
                  "E0,12/08/17,A,B,1,0,H,2,3,4\n"
                  "E0,13/08/17,C,D,1,1,X,2,3,4\n");
    FAIL("expected a row error");
  } catch (const DataError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(
      parse_matches(std::string(kHeader) + "E0,32/08/17,A,B,1,0,H,2,3,4\n"),
      DataError);
  CHECK_THROWS_AS(
      parse_matches(std::string(kHeader) + "E0,12/08/17,A,B,1,0,H,1.0,3,4\n"),
      DataError);
  CHECK_THROWS_AS(
      parse_matches(std::string(kHeader) + "E0,12/08/17,A,A,1,0,H,2,3,4\n"),
      DataError);
  CHECK_THROWS_AS(load_matches("/nonexistent/season.csv"), DataError);
}

TEST_CASE("field handling") {
  const auto d = parse_matches(
      "\xEF\xBB\xBF" + std::string(kHeader) +
      "E0,19/08/95,\"Team, One\",B,0,0,D,,,\r\n"
      "E0,19/08/1995,\"Say \"\"Hi\"\"\",B,1,2,A,2.1,3.3,3.5\r\n"
      ",,,,,,,,,\r\n"
      "E0,18/08/95,B,C,1,2,A,2.1,3.3\r\n");
  REQUIRE(d.n_games() == 3);
  // Sorted by date: the 18th first, then the two games of the 19th in order.
  CHECK(d.teams[d.games[0].home] == "B");
  CHECK(d.teams[d.games[1].home] == "Team, One");
  CHECK(d.teams[d.games[2].home] == "Say \"Hi\"");
  CHECK_FALSE(d.games[0].odds);  // B365A missing
  CHECK_FALSE(d.games[1].odds);
  CHECK(d.games[2].odds);
  CHECK(d.games[1].date == d.games[2].date);
  CHECK(static_cast<int>(d.games[1].date.year()) == 1995);
  CHECK(d.find_team("C").has_value());
  CHECK_FALSE(d.find_team("Z").has_value());
}

TEST_CASE("dates") {
  CHECK(parse_date("01/02/03") ==
        year_month_day{std::chrono::year{2003}, std::chrono::February,
                       std::chrono::day{1}});
  CHECK(parse_date("1/2/1999") ==
        year_month_day{std::chrono::year{1999}, std::chrono::February,
                       std::chrono::day{1}});
  CHECK_FALSE(parse_date("29/02/2019"));
  CHECK(parse_date("29/02/2020"));
  CHECK_FALSE(parse_date("2020-02-01"));
  CHECK_FALSE(parse_date("01/02/203"));
  CHECK(format_date(*parse_date("1/2/03")) == "01/02/2003");
}

TEST_CASE("full season dimensions") {
  SimSpec spec;
  spec.theta_true.assign(20, 0.0);
  spec.model = {600.0, 0.7, 0.3, 0.0, Family::kDavidson};
  const auto text = write(generate_season(spec).dataset);
  const auto d = parse_matches(text);
  CHECK(d.n_teams() == 20);
  CHECK(d.n_games() == 380);
  const auto s = empirical_stats(d.games);
  CHECK(std::abs(s.p_home + s.p_away + s.p_draw - 1.0) < 1e-12);
}

TEST_CASE("write is verbatim for parsed input") {
  const std::string text =
      "Date,HomeTeam,AwayTeam,FTR,B365H,B365D,B365A\n"
      "12/08/17,Arsenal,Leicester,H,1.53,4.50,6.5\n"
      "12/08/17,\"Brighton, FC\",Man City,A,11.0,5.5,1.33\n"
      "13/08/2017,Chelsea,Burnley,D,,,\n";
  CHECK(write(parse_matches(text)) == text);
}

TEST_CASE("parse-write-parse round trip on random datasets") {
  std::mt19937_64 rng(31);
  const std::vector<std::string> names{"Arsenal", "Man \"U\"", "A, B", "Zed",
                                       "Wolves", "Spurs"};
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<MatchRow> rows;
    const int n = 1 + static_cast<int>(rng() % 40);
    for (int i = 0; i < n; ++i) {
      MatchRow row;
      const auto h = rng() % names.size();
      auto a = rng() % names.size();
      if (a == h) a = (a + 1) % names.size();
      row.home_team = names[h];
      row.away_team = names[a];
      row.game.date = year_month_day{
          std::chrono::sys_days{std::chrono::year{2010} / 1 / 1} +
          std::chrono::days{static_cast<int>(rng() % 400)}};
      row.game.outcome = static_cast<Outcome>(rng() % 3);
      if (rng() % 3 != 0) {
        auto odd = [&] { return 1.01 + static_cast<double>(rng() % 3000) / 97.0; };
        row.game.odds = Odds{odd(), odd(), odd()};
      }
      rows.push_back(std::move(row));
    }
    const auto original = build_dataset(std::move(rows));
    const auto first = parse_matches(write(original));
    check_same_games(original, first);
    const auto second = parse_matches(write(first));
    check_same_games(first, second);
    CHECK(write(first) == write(second));
  }
}

TEST_CASE("odds_to_probs") {
  auto p = odds_to_probs(2.0, 4.0, 4.0);
  CHECK(p.home == 0.5);
  CHECK(p.draw == 0.25);
  CHECK(p.away == 0.25);

  p = odds_to_probs(1.5, 4.5, 6.0);
  // Reciprocals 2/3, 2/9, 1/6 sum to 19/18.
  CHECK(p.home == doctest::Approx(12.0 / 19.0).epsilon(1e-14));
  CHECK(p.draw == doctest::Approx(4.0 / 19.0).epsilon(1e-14));
  CHECK(p.away == doctest::Approx(3.0 / 19.0).epsilon(1e-14));
  CHECK(p.home == doctest::Approx(0.63158).epsilon(1e-5));

  p = odds_to_probs(3.0, 3.0, 3.0);
  CHECK(p.home == doctest::Approx(1.0 / 3.0));
  CHECK(p.draw == doctest::Approx(1.0 / 3.0));

  CHECK_THROWS_AS(odds_to_probs(1.0, 3.0, 3.0), InvalidArgument);
  CHECK_THROWS_AS(odds_to_probs(2.0, 0.5, 3.0), InvalidArgument);
}

TEST_CASE("odds_to_probs ignores a common factor on the odds") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(1.05, 12.0);
  for (int i = 0; i < 200; ++i) {
    const double h = u(rng), d = u(rng), a = u(rng);
    const double c = 1.0 + u(rng);
    const auto p = odds_to_probs(h, d, a);
    const auto q = odds_to_probs(c * h, c * d, c * a);
    CHECK(p.home == doctest::Approx(q.home).epsilon(1e-13));
    CHECK(p.draw == doctest::Approx(q.draw).epsilon(1e-13));
    CHECK(p.away == doctest::Approx(q.away).epsilon(1e-13));
    CHECK(std::abs(p.home + p.draw + p.away - 1.0) < 1e-12);
  }
}

TEST_CASE("scheduling vector") {
  const SchedulingVector x(0, 1, 3);
  CHECK(x.dense() == std::vector<double>{1.0, -1.0, 0.0});
  CHECK(x.dot(std::vector{4.0, 4.0, 4.0}) == 0.0);
  CHECK(SchedulingVector(2, 0, 3).dot(std::vector{5.0, 0.0, 8.0}) == 3.0);
  CHECK_THROWS_AS(SchedulingVector(1, 1, 3), InvalidArgument);
  CHECK_THROWS_AS(SchedulingVector(0, 3, 3), InvalidArgument);
  CHECK_THROWS_AS(x.dot(std::vector{1.0}), InvalidArgument);
}

}  // namespace
}  // namespace kelo
