// Copyright 2026 The Floodloss Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

#include "floodloss/claims.hpp"

#include <cerrno>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "floodloss/csv.hpp"

namespace floodloss {

namespace {

const std::string kDateOfLoss = "dateOfLoss";
const std::string kConstructionDate = "originalConstructionDate";
const std::string kYearOfLoss = "yearOfLoss";

std::optional<double> parse_number(const std::string& text) {
    if (text.empty()) return std::nullopt;
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) return std::nullopt;
    return v;
}

FieldSpec continuous_spec(bool monetary = false, bool response = false) {
    FieldSpec s;
    s.kind = FieldKind::continuous;
    s.monetary = monetary;
    s.response = response;
    return s;
}

FieldSpec categorical_spec(std::vector<std::string> levels = {}) {
    FieldSpec s;
    s.kind = FieldKind::categorical;
    s.levels = std::move(levels);
    return s;
}

FieldSpec date_spec() {
    FieldSpec s;
    s.kind = FieldKind::date;
    return s;
}

}  // namespace

const std::string& SchemaRegistry::response_field() const {
    for (const auto& [name, spec] : fields) {
        if (spec.response) return name;
    }
    throw std::invalid_argument("schema registry has no response field");
}

void SchemaRegistry::validate() const {
    int responses = 0;
    for (const auto& [name, spec] : fields) {
        if (spec.response) {
            ++responses;
            if (spec.kind != FieldKind::continuous || !spec.monetary)
                throw std::invalid_argument(
                    "response field '" + name + "' must be continuous and monetary");
        }
    }
    if (responses != 1)
        throw std::invalid_argument("schema registry must have exactly one response field");
}

SchemaRegistry nfip_schema() {
    SchemaRegistry r;
    auto yn = [] { return categorical_spec({"Y", "N"}); };

    r.fields["agricultureStructureIndicator"] = yn();
    r.fields["basementEnclosureCrawlspace"] = categorical_spec({"0", "1", "2", "3", "4"});
    r.fields["communityRatingSystemDiscount"] = categorical_spec();
    r.fields["condominiumIndicator"] = categorical_spec({"N", "U", "A", "H", "L", "T"});
    r.fields["countyCode"] = categorical_spec();
    r.fields[kDateOfLoss] = date_spec();
    r.fields["elevatedBuildingIndicator"] = yn();
    r.fields["elevationCertificateIndicator"] = yn();
    r.fields["floodZone"] = categorical_spec();
    r.fields["houseOfWorship"] = yn();
    r.fields["locationOfContents"] = categorical_spec();
    r.fields["nonProfitIndicator"] = yn();
    r.fields["numberOfFloorsInTheInsuredBuilding"] = categorical_spec();
    r.fields["obstructionType"] = categorical_spec();
    r.fields["occupancyType"] = categorical_spec({"1", "2", "3", "4"});
    r.fields[kConstructionDate] = date_spec();
    r.fields["postFirmConstructionIndicator"] = yn();
    r.fields["primaryResidence"] = yn();
    r.fields["rateMethod"] = categorical_spec();
    r.fields["reportedZipcode"] = categorical_spec();
    r.fields["smallBusinessIndicatorBuilding"] = yn();
    r.fields[kYearOfLoss] = categorical_spec();

    r.fields["amountPaidOnBuildingClaim"] = continuous_spec(true, true);
    r.fields["baseFloodElevation"] = continuous_spec();
    r.fields["elevationDifference"] = continuous_spec();
    r.fields["latitude"] = continuous_spec();
    r.fields["latitude"].numeric_range = {-90.0, 90.0};
    r.fields["longitude"] = continuous_spec();
    r.fields["longitude"].numeric_range = {-180.0, 180.0};
    r.fields["lowestAdjacentGrade"] = continuous_spec();
    r.fields["lowestFloorElevation"] = continuous_spec();
    r.fields["policyCount"] = continuous_spec();
    r.fields["totalBuildingInsuranceCoverage"] = continuous_spec(true);
    r.fields["totalContentsInsuranceCoverage"] = continuous_spec(true);

    r.validate();
    return r;
}

SchemaRegistry load_schema(std::istream& in) {
    SchemaRegistry r;
    for (const auto& rec : read_csv(in)) {
        if (rec.empty() || rec[0].empty() || rec[0][0] == '#') continue;
        if (rec.size() < 2)
            throw std::runtime_error("schema line needs at least name,kind");
        FieldSpec spec;
        const std::string& kind = rec[1];
        if (kind == "continuous") spec.kind = FieldKind::continuous;
        else if (kind == "categorical") spec.kind = FieldKind::categorical;
        else if (kind == "date") spec.kind = FieldKind::date;
        else throw std::runtime_error("unknown field kind '" + kind + "'");
        for (size_t i = 2; i < rec.size(); ++i) {
            if (rec[i] == "monetary") spec.monetary = true;
            else if (rec[i] == "response") spec.response = true;
            else if (!rec[i].empty())
                throw std::runtime_error("unknown schema attribute '" + rec[i] + "'");
        }
        if (!r.fields.emplace(rec[0], spec).second)
            throw std::runtime_error("duplicate schema field '" + rec[0] + "'");
    }
    r.validate();
    return r;
}

void save_schema(const SchemaRegistry& schema, std::ostream& out) {
    for (const auto& [name, spec] : schema.fields) {
        out << name << ',';
        switch (spec.kind) {
            case FieldKind::continuous: out << "continuous"; break;
            case FieldKind::categorical: out << "categorical"; break;
            case FieldKind::date: out << "date"; break;
        }
        if (spec.monetary) out << ",monetary";
        if (spec.response) out << ",response";
        out << '\n';
    }
}

const Column& ClaimTable::col(const std::string& name) const {
    auto it = columns.find(name);
    if (it == columns.end())
        throw std::out_of_range("no column '" + name + "'");
    return it->second;
}

Column& ClaimTable::col(const std::string& name) {
    auto it = columns.find(name);
    if (it == columns.end())
        throw std::out_of_range("no column '" + name + "'");
    return it->second;
}

std::optional<int> ClaimTable::loss_year(std::size_t row) const {
    if (has(kYearOfLoss)) {
        const Column& c = col(kYearOfLoss);
        if (!c.missing[row]) {
            if (auto y = parse_number(c.cat[row])) return static_cast<int>(*y);
        }
    }
    if (has(kDateOfLoss)) {
        const Column& c = col(kDateOfLoss);
        if (!c.missing[row]) return c.dates[row].year;
    }
    return std::nullopt;
}

void ClaimTable::check_invariants() const {
    if (field_order.size() != columns.size())
        throw std::logic_error("field order and column map disagree");
    for (const auto& name : field_order) {
        const Column& c = col(name);
        const std::size_t vals = c.kind == FieldKind::continuous ? c.num.size()
                                 : c.kind == FieldKind::categorical ? c.cat.size()
                                                                    : c.dates.size();
        if (vals != rows || c.missing.size() != rows)
            throw std::logic_error("column '" + name + "' length mismatch");
    }
    if (!response_field.empty() && has(response_field)) {
        const Column& c = col(response_field);
        for (std::size_t i = 0; i < rows; ++i)
            if (!c.missing[i] && c.num[i] < 0.0)
                throw std::logic_error("negative response amount at row " +
                                       std::to_string(i));
    }
}

CpiTable load_cpi(std::istream& in, int base_year) {
    CpiTable cpi;
    cpi.base_year = base_year;
    for (const auto& rec : read_csv(in)) {
        if (rec.empty() || rec[0].empty() || rec[0][0] == '#') continue;
        if (rec[0] == "year") continue;  // optional header
        if (rec.size() != 2) throw std::runtime_error("cpi line needs year,index");
        const auto year = parse_number(rec[0]);
        const auto index = parse_number(rec[1]);
        if (!year || !index) throw std::runtime_error("unparseable cpi line");
        if (*index <= 0.0) throw std::runtime_error("cpi index must be positive");
        cpi.index_by_year[static_cast<int>(*year)] = *index;
    }
    return cpi;
}

ClaimTable parse_claims(std::istream& in, const SchemaRegistry& schema) {
    schema.validate();
    auto header = read_csv_record(in);
    if (!header) throw std::runtime_error("empty claims stream (no header row)");

    ClaimTable table;
    table.response_field = schema.response_field();

    std::set<std::string> seen;
    for (const auto& name : *header) {
        if (!schema.has(name))
            throw std::runtime_error("header field '" + name + "' not in schema");
        if (!seen.insert(name).second)
            throw std::runtime_error("duplicate column name '" + name + "'");
        Column c;
        c.kind = schema.fields.at(name).kind;
        table.columns.emplace(name, std::move(c));
        table.field_order.push_back(name);
    }
    if (!seen.count(table.response_field))
        throw std::runtime_error("response column '" + table.response_field +
                                 "' missing from header");

    while (auto rec = read_csv_record(in)) {
        if (rec->size() == 1 && (*rec)[0].empty()) continue;  // blank line
        if (rec->size() != table.field_order.size())
            throw std::runtime_error(
                "row " + std::to_string(table.rows) + " has " +
                std::to_string(rec->size()) + " cells, expected " +
                std::to_string(table.field_order.size()));
        for (size_t j = 0; j < rec->size(); ++j) {
            Column& c = table.columns.at(table.field_order[j]);
            const std::string& cell = (*rec)[j];
            bool missing = cell.empty();
            switch (c.kind) {
                case FieldKind::continuous: {
                    auto v = parse_number(cell);
                    if (!missing && !v) {
                        missing = true;
                        ++table.coercion_warnings;
                    }
                    c.num.push_back(v.value_or(0.0));
                    break;
                }
                case FieldKind::categorical:
                    c.cat.push_back(cell);
                    break;
                case FieldKind::date: {
                    auto d = parse_iso_date(cell);
                    if (!missing && !d) {
                        missing = true;
                        ++table.coercion_warnings;
                    }
                    c.dates.push_back(d.value_or(Date{}));
                    break;
                }
            }
            c.missing.push_back(missing ? 1 : 0);
        }
        ++table.rows;
    }
    table.check_invariants();
    return table;
}

void serialize_claims(const ClaimTable& table, std::ostream& out) {
    out << join_csv_record(table.field_order) << '\n';
    std::vector<std::string> rec(table.field_order.size());
    for (std::size_t i = 0; i < table.rows; ++i) {
        for (size_t j = 0; j < table.field_order.size(); ++j) {
            const Column& c = table.columns.at(table.field_order[j]);
            if (c.missing[i]) {
                rec[j].clear();
                continue;
            }
            switch (c.kind) {
                case FieldKind::continuous: rec[j] = format_double(c.num[i]); break;
                case FieldKind::categorical: rec[j] = c.cat[i]; break;
                case FieldKind::date: rec[j] = format_iso_date(c.dates[i]); break;
            }
        }
        out << join_csv_record(rec) << '\n';
    }
}

void write_flags(const ClaimTable& table, std::ostream& out) {
    out << "row,field,flag\n";
    for (const auto& f : table.flags)
        out << f.row << ',' << csv_escape(f.field) << ',' << csv_escape(f.code)
            << '\n';
}

ClaimTable adjust_inflation(const ClaimTable& table, const CpiTable& cpi) {
    ClaimTable out = table;
    const double base = cpi.at(cpi.base_year);

    std::vector<std::string> monetary;
    const SchemaRegistry schema = nfip_schema();
    for (const auto& name : out.field_order) {
        auto it = schema.fields.find(name);
        const bool is_response = name == out.response_field;
        if (is_response || (it != schema.fields.end() && it->second.monetary))
            monetary.push_back(name);
    }

    for (std::size_t i = 0; i < out.rows; ++i) {
        const auto year = out.loss_year(i);
        if (!year) {
            out.flags.push_back({i, kYearOfLoss, "missing_loss_year"});
            continue;
        }
        if (!cpi.covers(*year)) {
            out.flags.push_back({i, kYearOfLoss, "cpi_year_uncovered"});
            continue;
        }
        const double factor = base / cpi.at(*year);
        for (const auto& name : monetary) {
            Column& c = out.col(name);
            if (c.kind != FieldKind::continuous || c.missing[i]) continue;
            c.num[i] *= factor;
        }
    }
    return out;
}

ClaimTable fix_construction_dates(const ClaimTable& table, int repair_cap) {
    ClaimTable out = table;
    if (!out.has(kDateOfLoss) || !out.has(kConstructionDate)) return out;
    const Column& loss = out.col(kDateOfLoss);
    Column& built = out.col(kConstructionDate);

    for (std::size_t i = 0; i < out.rows; ++i) {
        if (loss.missing[i] || built.missing[i]) continue;
        int repairs = 0;
        Date d = built.dates[i];
        while (d > loss.dates[i] && repairs < repair_cap) {
            d = add_years(d, -100);
            ++repairs;
        }
        if (repairs > 0) {
            built.dates[i] = d;
            out.flags.push_back({i, kConstructionDate, "construction_date_repaired"});
        }
        if (d > loss.dates[i])
            out.flags.push_back({i, kConstructionDate, "construction_date_unrepaired"});
    }
    return out;
}

}  // namespace floodloss
