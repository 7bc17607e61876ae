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

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>

#include "kelo/error.h"

namespace kelo {
namespace {

struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line where the record starts
};

// RFC 4180 records: quoted fields may contain commas, quotes ("") and line
// breaks. Accepts LF and CRLF line endings.
class CsvReader {
 public:
  explicit CsvReader(std::string_view text) : text_(text) {
    if (text_.starts_with("\xEF\xBB\xBF")) text_.remove_prefix(3);
  }

  bool next(CsvRecord& record) {
    if (pos_ >= text_.size()) return false;
    record.fields.clear();
    record.line = line_;
    std::string field;
    bool quoted = false;
    bool was_quoted = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_++];
      if (quoted) {
        if (c == '"') {
          if (pos_ < text_.size() && text_[pos_] == '"') {
            field.push_back('"');
            ++pos_;
          } else {
            quoted = false;
          }
        } else {
          if (c == '\n') ++line_;
          field.push_back(c);
        }
      } else if (c == '"' && field.empty() && !was_quoted) {
        quoted = was_quoted = true;
      } else if (c == ',') {
        record.fields.push_back(std::move(field));
        field.clear();
        was_quoted = false;
      } else if (c == '\n' || c == '\r') {
        if (c == '\r' && pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
        ++line_;
        break;
      } else {
        field.push_back(c);
      }
    }
    if (quoted) throw DataError("unterminated quoted field", record.line);
    record.fields.push_back(std::move(field));
    return true;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
};

bool blank(const CsvRecord& record) {
  return std::all_of(record.fields.begin(), record.fields.end(),
                     [](const std::string& f) { return f.empty(); });
}

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::optional<double> parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end || s.empty()) return std::nullopt;
  return value;
}

std::string format_double(double x) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), ptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::optional<TeamId> Dataset::find_team(std::string_view name) const {
  auto it = std::lower_bound(teams.begin(), teams.end(), name);
  if (it == teams.end() || *it != name) return std::nullopt;
  return static_cast<TeamId>(it - teams.begin());
}

Dataset build_dataset(std::vector<MatchRow> rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const MatchRow& a, const MatchRow& b) {
                     return a.game.date < b.game.date;
                   });
  std::map<std::string, TeamId> index;
  for (const auto& row : rows) {
    index.emplace(row.home_team, 0);
    index.emplace(row.away_team, 0);
  }
  Dataset dataset;
  dataset.teams.reserve(index.size());
  for (auto& [name, id] : index) {
    id = dataset.teams.size();
    dataset.teams.push_back(name);
  }
  dataset.games.reserve(rows.size());
  for (auto& row : rows) {
    if (row.home_team == row.away_team) {
      throw DataError("team '" + row.home_team + "' plays itself");
    }
    row.game.home = index.at(row.home_team);
    row.game.away = index.at(row.away_team);
    dataset.games.push_back(std::move(row.game));
  }
  return dataset;
}

std::optional<std::chrono::year_month_day> parse_date(std::string_view text) {
  const auto first = text.find('/');
  const auto second =
      first == std::string_view::npos ? first : text.find('/', first + 1);
  if (second == std::string_view::npos) return std::nullopt;
  const auto day = parse_int(text.substr(0, first));
  const auto month = parse_int(text.substr(first + 1, second - first - 1));
  const auto year_text = text.substr(second + 1);
  auto year = parse_int(year_text);
  if (!day || !month || !year) return std::nullopt;
  if (year_text.size() == 2) {
    *year += *year < 50 ? 2000 : 1900;
  } else if (year_text.size() != 4) {
    return std::nullopt;
  }
  const std::chrono::year_month_day date{
      std::chrono::year{*year}, std::chrono::month{static_cast<unsigned>(*month)},
      std::chrono::day{static_cast<unsigned>(*day)}};
  if (*day <= 0 || *month <= 0 || !date.ok()) return std::nullopt;
  return date;
}

std::string format_date(std::chrono::year_month_day date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02u/%02u/%04d",
                static_cast<unsigned>(date.day()),
                static_cast<unsigned>(date.month()),
                static_cast<int>(date.year()));
  return buf;
}

Dataset parse_matches(std::string_view text) {
  CsvReader reader(text);
  CsvRecord header;
  if (!reader.next(header)) return {};  // zero-byte file
  if (blank(header)) throw DataError("missing header row");
  auto column = [&](std::string_view name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
      if (header.fields[i] == name) return i;
    }
    return std::nullopt;
  };
  std::array<std::size_t, 4> required{};
  constexpr std::array<const char*, 4> kRequired{"Date", "HomeTeam",
                                                 "AwayTeam", "FTR"};
  for (std::size_t i = 0; i < kRequired.size(); ++i) {
    const auto c = column(kRequired[i]);
    if (!c) {
      throw DataError(std::string("missing required column '") + kRequired[i] +
                      "'");
    }
    required[i] = *c;
  }
  const std::array<std::optional<std::size_t>, 3> odds_cols{
      column("B365H"), column("B365D"), column("B365A")};

  std::vector<MatchRow> rows;
  CsvRecord record;
  while (reader.next(record)) {
    if (blank(record)) continue;
    auto field = [&](std::optional<std::size_t> c) -> std::string_view {
      if (!c || *c >= record.fields.size()) return {};
      return record.fields[*c];
    };
    MatchRow row;
    const auto date_text = field(required[0]);
    const auto date = parse_date(date_text);
    if (!date) {
      throw DataError("unparseable date '" + std::string(date_text) + "'",
                      record.line);
    }
    row.game.date = *date;
    row.game.date_text = date_text;
    row.home_team = field(required[1]);
    row.away_team = field(required[2]);
    if (row.home_team.empty() || row.away_team.empty()) {
      throw DataError("missing team name", record.line);
    }
    if (row.home_team == row.away_team) {
      throw DataError("team '" + row.home_team + "' plays itself",
                      record.line);
    }
    const auto ftr = field(required[3]);
    const auto outcome = parse_outcome(ftr);
    if (!outcome) {
      throw DataError("unparseable FTR '" + std::string(ftr) + "'",
                      record.line);
    }
    row.game.outcome = *outcome;

    std::array<std::string_view, 3> odds_text;
    bool all_present = true;
    for (std::size_t i = 0; i < 3; ++i) {
      odds_text[i] = field(odds_cols[i]);
      all_present = all_present && !odds_text[i].empty();
    }
    if (all_present) {
      std::array<double, 3> o{};
      for (std::size_t i = 0; i < 3; ++i) {
        const auto value = parse_double(odds_text[i]);
        if (!value || !(*value > 1.0) || !std::isfinite(*value)) {
          throw DataError("invalid decimal odds '" + std::string(odds_text[i]) +
                              "'",
                          record.line);
        }
        o[i] = *value;
        row.game.odds_text[i] = odds_text[i];
      }
      row.game.odds = Odds{o[0], o[1], o[2]};
    }
    rows.push_back(std::move(row));
  }
  return build_dataset(std::move(rows));
}

Dataset parse_matches(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  if (in.bad()) throw DataError("read error");
  return parse_matches(std::string_view(text));
}

Dataset load_matches(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  try {
    return parse_matches(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void write_matches(const Dataset& dataset, std::ostream& out) {
  out << "Date,HomeTeam,AwayTeam,FTR,B365H,B365D,B365A\n";
  for (const auto& g : dataset.games) {
    out << csv_field(g.date_text.empty() ? format_date(g.date) : g.date_text)
        << ',' << csv_field(dataset.teams.at(g.home)) << ','
        << csv_field(dataset.teams.at(g.away)) << ',' << outcome_code(g.outcome);
    if (g.odds) {
      const std::array<double, 3> values{g.odds->home, g.odds->draw,
                                         g.odds->away};
      for (std::size_t i = 0; i < 3; ++i) {
        out << ','
            << (g.odds_text[i].empty() ? format_double(values[i])
                                       : csv_field(g.odds_text[i]));
      }
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

OutcomeProbs odds_to_probs(double home, double draw, double away) {
  for (double o : {home, draw, away}) {
    if (!(o > 1.0) || !std::isfinite(o)) {
      throw InvalidArgument("decimal odds must be finite and greater than 1");
    }
  }
  const double total = 1.0 / home + 1.0 / draw + 1.0 / away;
  return {(1.0 / home) / total, (1.0 / away) / total, (1.0 / draw) / total};
}

OutcomeProbs odds_to_probs(const Odds& odds) {
  return odds_to_probs(odds.home, odds.draw, odds.away);
}

SchedulingVector::SchedulingVector(TeamId home, TeamId away, std::size_t dim)
    : home_(home), away_(away), dim_(dim) {
  if (home == away) {
    throw InvalidArgument("scheduling vector needs two distinct players");
  }
  if (home >= dim || away >= dim) {
    throw InvalidArgument("scheduling vector index out of range");
  }
}

double SchedulingVector::dot(std::span<const double> theta) const {
  if (theta.size() != dim_) {
    throw InvalidArgument("rating vector has the wrong dimension");
  }
  return theta[home_] - theta[away_];
}

std::vector<double> SchedulingVector::dense() const {
  std::vector<double> x(dim_, 0.0);
  x[home_] = 1.0;
  x[away_] = -1.0;
  return x;
}

}  // namespace kelo
