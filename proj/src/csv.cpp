// Copyright 2026 The Floodloss Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "floodloss/csv.hpp"

#include <cstdio>
#include <cstring>

namespace floodloss {

std::optional<std::vector<std::string>> read_csv_record(std::istream& in) {
    int c = in.get();
    if (c == EOF) return std::nullopt;

    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    while (true) {
        if (c == EOF) {
            fields.push_back(cur);
            return fields;
        }
        char ch = static_cast<char>(c);
        if (quoted) {
            if (ch == '"') {
                if (in.peek() == '"') {
                    in.get();
                    cur.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                cur.push_back(ch);
            }
        } else if (ch == '"' && cur.empty()) {
            quoted = true;
        } else if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch == '\n') {
            if (!cur.empty() && cur.back() == '\r') cur.pop_back();
            fields.push_back(cur);
            return fields;
        } else {
            cur.push_back(ch);
        }
        c = in.get();
    }
}

std::vector<std::vector<std::string>> read_csv(std::istream& in) {
    std::vector<std::vector<std::string>> out;
    while (auto rec = read_csv_record(in)) {
        // Skip completely blank trailing lines.
        if (rec->size() == 1 && (*rec)[0].empty() && in.peek() == EOF) break;
        out.push_back(std::move(*rec));
    }
    return out;
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
    std::string out = "\"";
    for (char ch : field) {
        if (ch == '"') out += "\"\"";
        else out.push_back(ch);
    }
    out.push_back('"');
    return out;
}

std::string join_csv_record(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    // Try increasing precision until the value round-trips exactly.
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof buf, "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    return buf;
}

}  // namespace floodloss
