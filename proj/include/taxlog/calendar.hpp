// Copyright 2026 The Taxlog Authors
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

// Proleptic Gregorian calendar arithmetic on day ordinals. The ordinal of
// 1970-01-01 is 0; all interval builtins reduce to ordinal differences.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace taxlog {

struct CivilDate {
  int year = 0;
  int month = 1;  // 1..12
  int day = 1;    // 1..31

  bool operator==(const CivilDate&) const = default;
  auto operator<=>(const CivilDate&) const = default;
};

class CalendarError : public std::runtime_error {
public:
  explicit CalendarError(const std::string& what) : std::runtime_error(what) {}
};

namespace calendar {

constexpr bool is_leap(int y) {
  return y % 4 == 0 && (y % 100 != 0 || y % 400 == 0);
}

constexpr int days_in_month(int y, int m) {
  constexpr int lengths[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (m == 2 && is_leap(y)) return 29;
  return lengths[m - 1];
}

constexpr int days_in_year(int y) { return is_leap(y) ? 366 : 365; }

constexpr bool valid(const CivilDate& d) {
  return d.month >= 1 && d.month <= 12 && d.day >= 1 &&
         d.day <= days_in_month(d.year, d.month);
}

// Days since 1970-01-01 (Howard Hinnant's civil-days construction).
constexpr std::int64_t to_ordinal(const CivilDate& date) {
  std::int64_t y = date.year;
  unsigned m = static_cast<unsigned>(date.month);
  unsigned d = static_cast<unsigned>(date.day);
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);             // [0, 399]
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;   // [0, 365]
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;            // [0, 146096]
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

constexpr CivilDate from_ordinal(std::int64_t z) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  const unsigned d = doy - (153 * mp + 2) / 5 + 1;
  const unsigned m = mp + (mp < 10 ? 3 : -9);
  return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m),
                   static_cast<int>(d)};
}

// 0 = Sunday ... 6 = Saturday.
constexpr int weekday(std::int64_t ordinal) {
  std::int64_t w = (ordinal + 4) % 7;  // 1970-01-01 was a Thursday
  return static_cast<int>(w < 0 ? w + 7 : w);
}

// Calendar weeks run Sunday through Saturday; the week containing
// January 1 of the date's year is week 1.
constexpr int week_of_year(const CivilDate& date) {
  std::int64_t jan1 = to_ordinal(CivilDate{date.year, 1, 1});
  std::int64_t off = to_ordinal(date) - jan1 + weekday(jan1);
  return static_cast<int>(off / 7) + 1;
}

constexpr int quarter_of(const CivilDate& date) { return (date.month - 1) / 3 + 1; }

// Inclusive day count of the intersection of [s1,e1] and [s2,e2]; 0 when disjoint.
constexpr std::int64_t overlap_days(std::int64_t s1, std::int64_t e1,
                                    std::int64_t s2, std::int64_t e2) {
  std::int64_t lo = s1 > s2 ? s1 : s2;
  std::int64_t hi = e1 < e2 ? e1 : e2;
  return hi >= lo ? hi - lo + 1 : 0;
}

// Strict "YYYY-MM-DD"; anything else is not a date lexeme.
inline bool looks_like_date(const std::string& s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

inline CivilDate parse_date(const std::string& s) {
  if (!looks_like_date(s)) throw CalendarError("not a date: \"" + s + "\"");
  CivilDate d;
  d.year = std::stoi(s.substr(0, 4));
  d.month = std::stoi(s.substr(5, 2));
  d.day = std::stoi(s.substr(8, 2));
  if (!valid(d)) throw CalendarError("invalid calendar date: \"" + s + "\"");
  return d;
}

inline std::string format_date(const CivilDate& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

}  // namespace calendar
}  // namespace taxlog
