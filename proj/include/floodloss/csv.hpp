// Copyright 2026 The Floodloss Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef FLOODLOSS_CSV_HPP
#define FLOODLOSS_CSV_HPP

#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace floodloss {

// Minimal RFC-4180 subset: comma separator, double-quote quoting with ""
// escapes, LF or CRLF line ends. Empty field means missing throughout.

/// Reads one record (may span lines inside quotes). Returns nullopt at EOF.
std::optional<std::vector<std::string>> read_csv_record(std::istream& in);

std::vector<std::vector<std::string>> read_csv(std::istream& in);

/// Quotes only when the field contains a comma, quote, or newline.
std::string csv_escape(const std::string& field);

std::string join_csv_record(const std::vector<std::string>& fields);

/// Shortest round-trip decimal form of a double (%.17g trimmed).
std::string format_double(double v);

}  // namespace floodloss

#endif
