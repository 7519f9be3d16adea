// Copyright 2026 The Floodloss Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#ifndef FLOODLOSS_CLAIMS_HPP
#define FLOODLOSS_CLAIMS_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "floodloss/dates.hpp"

namespace floodloss {

enum class FieldKind { continuous, categorical, date };

struct FieldSpec {
    FieldKind kind = FieldKind::categorical;
    bool monetary = false;
    bool response = false;
    // Documented value domain from the source schema; informational, not
    // enforced during parsing (kind coercion is).
    std::vector<std::string> levels;
    std::optional<std::pair<double, double>> numeric_range;
};

/// Field name -> spec. Exactly one response field (continuous + monetary).
struct SchemaRegistry {
    std::map<std::string, FieldSpec> fields;

    const std::string& response_field() const;
    bool has(const std::string& name) const { return fields.count(name) > 0; }
    void validate() const;  // throws std::invalid_argument on bad registry
};

/// Built-in NFIP claims registry: 22 discrete (incl. two date-kind) fields
/// plus 9 continuous predictors and the continuous monetary response.
SchemaRegistry nfip_schema();

/// Text form, one field per line: name,kind[,monetary][,response]
SchemaRegistry load_schema(std::istream& in);
void save_schema(const SchemaRegistry& schema, std::ostream& out);

struct Column {
    FieldKind kind = FieldKind::categorical;
    std::vector<double> num;        // kind == continuous
    std::vector<std::string> cat;   // kind == categorical
    std::vector<Date> dates;        // kind == date
    std::vector<char> missing;      // 1 = missing, one entry per row

    std::size_t size() const { return missing.size(); }
};

struct RowFlag {
    std::size_t row = 0;
    std::string field;
    std::string code;

    bool operator==(const RowFlag&) const = default;
};

/// Columnar claims table. Rows are never dropped: every ingest failure
/// becomes a mask bit or a flag so downstream imputation sees all records.
struct ClaimTable {
    std::vector<std::string> field_order;      // header order
    std::map<std::string, Column> columns;
    std::size_t rows = 0;
    std::vector<RowFlag> flags;
    std::size_t coercion_warnings = 0;
    std::string response_field;
    std::vector<std::string> monetary_fields;  // from the parse-time schema

    const Column& col(const std::string& name) const;
    Column& col(const std::string& name);
    bool has(const std::string& name) const { return columns.count(name) > 0; }

    /// Loss year for a row: yearOfLoss token when present, else the year of
    /// dateOfLoss. nullopt when both are missing/unparseable.
    std::optional<int> loss_year(std::size_t row) const;

    void check_invariants() const;  // throws std::logic_error on violation
};

struct CpiTable {
    std::map<int, double> index_by_year;  // values > 0
    int base_year = 2020;

    bool covers(int year) const { return index_by_year.count(year) > 0; }
    double at(int year) const { return index_by_year.at(year); }
};

/// Two-column csv (year,index). Throws on non-positive index values.
CpiTable load_cpi(std::istream& in, int base_year = 2020);

/// Parses a comma-separated stream with a header row naming a subset of
/// schema fields (the response must be among them). Cells that fail kind
/// coercion are marked missing and counted, never dropped.
/// Throws std::runtime_error on fatal schema errors (missing response,
/// duplicate or unknown header names).
ClaimTable parse_claims(std::istream& in, const SchemaRegistry& schema);

/// Inverse of parse_claims: same column order, empty string for missing,
/// round-trip exact for finite values.
void serialize_claims(const ClaimTable& table, std::ostream& out);

/// Sidecar flags file: row,field,code (with header).
void write_flags(const ClaimTable& table, std::ostream& out);

/// Monetary columns scaled by CPI(base)/CPI(loss year), expressed in
/// base-year dollars. Rows with missing loss year or uncovered CPI year are
/// flagged and left unchanged.
ClaimTable adjust_inflation(const ClaimTable& table, const CpiTable& cpi);

/// Subtracts 100 years from originalConstructionDate while it postdates
/// dateOfLoss, up to repair_cap times; unrepaired rows are flagged.
ClaimTable fix_construction_dates(const ClaimTable& table, int repair_cap = 3);

}  // namespace floodloss

#endif
