// Copyright 2026 The Floodloss Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef FLOODLOSS_DATES_HPP
#define FLOODLOSS_DATES_HPP

#include <compare>
#include <optional>
#include <string>

namespace floodloss {

/// Proleptic Gregorian calendar date. Plain aggregate; validity is checked
/// at parse/construction points, not on every access.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..days_in_month

    auto operator<=>(const Date&) const = default;
};

bool is_leap_year(int year);
int days_in_month(int year, int month);
bool is_valid_date(const Date& d);

/// 1-based ordinal day within the year (1..365/366).
int day_of_year(const Date& d);

/// Rebuild a date from (year, day-of-year), clamping doy to the year length.
Date date_from_year_doy(int year, int doy);

/// Days since 1970-01-01 (negative before). Howard Hinnant's civil algorithm.
long long days_from_civil(const Date& d);
Date civil_from_days(long long days);

/// Shift by whole years; Feb 29 clamps to Feb 28 in non-leap targets.
Date add_years(const Date& d, int years);

/// Strict ISO-8601 (YYYY-MM-DD). Returns nullopt on any malformation.
std::optional<Date> parse_iso_date(const std::string& text);
std::string format_iso_date(const Date& d);

/// Months elapsed since January 1960: (year-1960)*12 + (month-1).
int month_index(const Date& d);

}  // namespace floodloss

#endif
