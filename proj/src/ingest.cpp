// Copyright 2026 The riskatlas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "riskatlas/ingest.hpp"
#include "riskatlas/csv.hpp"
#include "riskatlas/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>

namespace riskatlas {

namespace {

std::chrono::sys_days parse_date_field(const CsvTable& table, size_t row, size_t col)
{
    const std::string& s = table.rows[row][col];
    int y = 0, m = 0, d = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "%d-%d-%d%c", &y, &m, &d, &tail) != 3)
        fail(Err::ParseError, table.source + ":" + std::to_string(table.line_numbers[row]) +
                                  ": bad date '" + s + "', expected YYYY-MM-DD");
    std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{unsigned(m)},
                                    std::chrono::day{unsigned(d)}};
    if (!ymd.ok())
        fail(Err::ParseError, table.source + ":" + std::to_string(table.line_numbers[row]) +
                                  ": invalid calendar date '" + s + "'");
    return std::chrono::sys_days{ymd};
}

void check_count(const CsvTable& table, size_t row, double v, const char* what)
{
    const std::string where = table.source + ":" + std::to_string(table.line_numbers[row]);
    if (v < 0) fail(Err::InvalidValue, where + ": negative " + what);
    if (std::abs(v - std::round(v)) > 1e-9)
        fail(Err::InvalidValue, where + ": " + what + " must be an integer count");
}

void warn(std::vector<std::string>* warnings, const std::string& msg)
{
    if (warnings) warnings->push_back(msg);
}

// Generic single-value indicator loader with per-file aggregation rule.
std::map<RegionKey, double> load_indicator(const CsvTable& table, const std::string& value_column,
                                           AggregateRule rule, const AliasTable& aliases,
                                           bool strict, std::vector<std::string>* warnings)
{
    size_t region_col = table.column("region");
    size_t value_col = table.column(value_column);
    auto pop_col = table.find_column("population");

    std::vector<RawIndicatorRow> rows;
    std::map<std::string, RegionKey> mapping;
    std::map<std::string, double> weights;
    rows.reserve(table.rows.size());
    for (size_t r = 0; r < table.rows.size(); ++r) {
        // Sub-unit identity must stay unique through aggregation even when
        // several raw rows share a region name, so key rows by row index.
        std::string subunit = table.source + "#" + std::to_string(r);
        RawIndicatorRow row;
        row.region = subunit;
        row.value = parse_number(table, r, value_col);
        rows.push_back(row);
        mapping[subunit] = canonicalize_region_name(table.rows[r][region_col], aliases, strict, warnings);
        if (pop_col) weights[subunit] = parse_number(table, r, *pop_col);
    }

    if (rule == AggregateRule::PopulationWeightedMean) {
        // Weighted mean needs weights only when a key actually has
        // duplicates; single-row keys pass through unchanged.
        std::map<RegionKey, int> count;
        for (auto& [sub, key] : mapping) ++count[key];
        bool has_dups = std::any_of(count.begin(), count.end(),
                                    [](const auto& kv) { return kv.second > 1; });
        if (has_dups && !pop_col)
            fail(Err::MissingColumn, table.source + ": duplicate regions need a 'population' "
                                                    "column for the weighted mean");
        if (!has_dups && !pop_col) {
            std::map<RegionKey, double> out;
            for (auto& row : rows) out[mapping[row.region]] = row.value;
            return out;
        }
        return aggregate_subunits(rows, mapping, rule, &weights);
    }
    return aggregate_subunits(rows, mapping, rule, nullptr);
}

} // namespace

AliasTable AliasTable::builtin()
{
    AliasTable t;
    t.aliases = {
        {"federal capital territory", "fct"},
        {"federal capital territory (fct)", "fct"},
        {"fct abuja", "fct"},
    };
    return t;
}

AliasTable AliasTable::load(const std::filesystem::path& path)
{
    AliasTable t = builtin();
    CsvTable csv = read_csv(path);
    size_t a = csv.column("alias");
    size_t c = csv.column("canonical");
    for (size_t r = 0; r < csv.rows.size(); ++r) {
        std::string alias = normalize_name(csv.rows[r][a]);
        std::string canon = normalize_name(csv.rows[r][c]);
        if (alias.empty() || canon.empty())
            fail(Err::InvalidAliasTable,
                 path.string() + ":" + std::to_string(csv.line_numbers[r]) + ": empty name");
        t.aliases[alias] = canon;
        t.canonical.insert(canon);
    }
    // Canonical names must be fixpoints: a chain alias -> x -> y is a
    // configuration error, not something to resolve silently.
    for (const auto& [alias, canon] : t.aliases) {
        auto it = t.aliases.find(canon);
        if (it != t.aliases.end() && it->second != canon)
            fail(Err::InvalidAliasTable, path.string() + ": '" + alias + "' maps to '" + canon +
                                             "' which is itself an alias for '" + it->second + "'");
    }
    return t;
}

std::string normalize_name(const std::string& raw)
{
    std::string out;
    out.reserve(raw.size());
    bool in_space = true; // leading whitespace dropped
    for (unsigned char c : raw) {
        if (std::isspace(c)) {
            in_space = true;
        } else {
            if (in_space && !out.empty()) out += ' ';
            in_space = false;
            out += char(std::tolower(c));
        }
    }
    return out;
}

RegionKey canonicalize_region_name(const std::string& raw, const AliasTable& table, bool strict,
                                   std::vector<std::string>* warnings)
{
    if (raw.empty()) fail(Err::InvalidValue, "empty region name");
    std::string name = normalize_name(raw);
    if (name.empty()) fail(Err::InvalidValue, "blank region name");
    auto it = table.aliases.find(name);
    if (it != table.aliases.end()) name = it->second;
    if (table.has_universe() && !table.canonical.count(name)) {
        if (strict) fail(Err::UnknownRegion, "'" + raw + "' (normalized '" + name + "')");
        warn(warnings, "unknown region '" + raw + "' kept as '" + name + "'");
    }
    return name;
}

std::map<RegionKey, double> aggregate_subunits(const std::vector<RawIndicatorRow>& rows,
                                               const std::map<std::string, RegionKey>& mapping,
                                               AggregateRule rule,
                                               const std::map<std::string, double>* weights)
{
    std::map<RegionKey, double> acc;
    std::map<RegionKey, double> wsum;

    for (const auto& row : rows) {
        auto it = mapping.find(row.region);
        if (it == mapping.end()) fail(Err::MissingMapping, "sub-unit '" + row.region + "' not mapped");
        const RegionKey& key = it->second;
        if (rule == AggregateRule::Sum) {
            acc[key] += row.value;
        } else {
            if (!weights)
                fail(Err::ZeroWeight, "weighted mean requested without sub-unit populations");
            auto w = weights->find(row.region);
            if (w == weights->end())
                fail(Err::ZeroWeight, "no population for sub-unit '" + row.region + "'");
            acc[key] += row.value * w->second;
            wsum[key] += w->second;
        }
    }
    if (rule == AggregateRule::PopulationWeightedMean) {
        for (auto& [key, num] : acc) {
            double w = wsum[key];
            if (w <= 0.0) fail(Err::ZeroWeight, "zero total population for region '" + key + "'");
            num /= w;
        }
    }
    return acc;
}

std::vector<RawIndicatorRow> align_year(const std::vector<RawIndicatorRow>& rows, int year)
{
    using namespace std::chrono;
    const sys_days first{year_month_day{std::chrono::year{year}, month{1}, day{1}}};
    const sys_days last{year_month_day{std::chrono::year{year}, month{12}, day{31}}};
    std::vector<RawIndicatorRow> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        if (!row.date) fail(Err::InvalidValue, "align_year: row without date");
        if (*row.date >= first && *row.date <= last) out.push_back(row);
    }
    return out;
}

std::vector<RegionRecord> build_region_table(const IndicatorSources& sources, bool impute_missing,
                                             std::vector<std::string>* exclusions,
                                             std::vector<std::string>* warnings)
{
    struct Column {
        const char* name;
        const std::map<RegionKey, double>* values;
    };
    const Column columns[] = {
        {"population", &sources.population}, {"area_km2", &sources.area_km2},
        {"rwi", &sources.rwi},               {"facilities", &sources.facilities},
        {"age60_share", &sources.age60_share}, {"total_cases", &sources.total_cases},
    };

    std::set<RegionKey> all_keys;
    for (const auto& col : columns)
        for (const auto& [key, _] : *col.values) all_keys.insert(key);

    std::map<std::string, double> column_mean;
    if (impute_missing) {
        for (const auto& col : columns) {
            double sum = 0.0;
            for (const auto& [_, v] : *col.values) sum += v;
            column_mean[col.name] = col.values->empty() ? 0.0 : sum / double(col.values->size());
        }
    }

    std::vector<RegionRecord> records;
    for (const auto& key : all_keys) {
        bool excluded = false;
        RegionRecord rec;
        rec.key = key;
        double* fields[] = {&rec.population, &rec.area_km2,    &rec.rwi,
                            &rec.facilities, &rec.age60_share, &rec.total_cases};
        for (size_t i = 0; i < std::size(columns); ++i) {
            auto it = columns[i].values->find(key);
            if (it != columns[i].values->end()) {
                *fields[i] = it->second;
            } else if (impute_missing) {
                *fields[i] = column_mean[columns[i].name];
                warn(warnings, "IMPUTED " + key + " " + columns[i].name + " = mean");
            } else {
                if (exclusions)
                    exclusions->push_back("EXCLUDED " + key + " missing " + columns[i].name);
                excluded = true;
            }
        }
        if (excluded) continue;

        if (rec.population <= 0.0) fail(Err::ZeroPopulation, "region '" + key + "'");
        if (rec.area_km2 <= 0.0) fail(Err::InvalidValue, "region '" + key + "': area must be > 0");
        rec.density = rec.population / rec.area_km2;
        auto it = sources.density.find(key);
        if (it != sources.density.end()) {
            double declared = it->second;
            double rel = std::abs(declared - rec.density) / std::max(std::abs(rec.density), 1e-300);
            if (rel > 1e-9)
                warn(warnings, "region '" + key + "': declared density " + fmt_sig12(declared) +
                                   " != population/area " + fmt_sig12(rec.density) +
                                   ", recomputed value used");
        }
        records.push_back(rec);
    }
    if (records.empty() && !all_keys.empty())
        fail(Err::EmptyJoin, "no region appears in all indicator sources");
    if (records.empty()) fail(Err::EmptyJoin, "no regions in any source");
    return records;
}

DailyCases load_cases_csv(const std::filesystem::path& path, const AliasTable& aliases, bool strict,
                          int year, std::vector<std::string>* warnings)
{
    CsvTable table = read_csv(path);
    size_t region_col = table.column("region");
    size_t date_col = table.column("date");
    size_t cases_col = table.column("new_cases");

    std::vector<RawIndicatorRow> rows;
    std::vector<RegionKey> keys;
    rows.reserve(table.rows.size());
    for (size_t r = 0; r < table.rows.size(); ++r) {
        RawIndicatorRow row;
        row.region = table.rows[r][region_col];
        row.value = parse_number(table, r, cases_col);
        check_count(table, r, row.value, "case count");
        row.date = parse_date_field(table, r, date_col);
        rows.push_back(row);
        keys.push_back(canonicalize_region_name(row.region, aliases, strict, warnings));
    }

    // Filter to the requested year, keeping the parallel key vector aligned.
    using namespace std::chrono;
    const sys_days first{year_month_day{std::chrono::year{year}, month{1}, day{1}}};
    const sys_days last{year_month_day{std::chrono::year{year}, month{12}, day{31}}};

    DailyCases out;
    std::map<RegionKey, std::map<sys_days, double>> acc;
    size_t dropped = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (*rows[i].date < first || *rows[i].date > last) {
            ++dropped;
            continue;
        }
        acc[keys[i]][*rows[i].date] += rows[i].value;
    }
    if (dropped)
        warn(warnings, path.string() + ": dropped " + std::to_string(dropped) +
                           " rows outside year " + std::to_string(year));
    for (auto& [key, by_date] : acc) {
        auto& series = out[key];
        series.reserve(by_date.size());
        for (auto& [date, v] : by_date) series.emplace_back(date, v);
    }
    return out;
}

PopulationData load_population_csv(const std::filesystem::path& path, const AliasTable& aliases,
                                   bool strict, std::vector<std::string>* warnings)
{
    CsvTable table = read_csv(path);
    size_t pop_col = table.column("population");
    table.column("area_km2"); // required, diagnose before any parsing
    for (size_t r = 0; r < table.rows.size(); ++r) {
        if (parse_number(table, r, pop_col) < 0.0)
            fail(Err::InvalidValue, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                        ": negative population");
    }

    PopulationData data;
    data.population = load_indicator(table, "population", AggregateRule::Sum, aliases, strict, warnings);
    data.area_km2 = load_indicator(table, "area_km2", AggregateRule::Sum, aliases, strict, nullptr);
    if (table.find_column("density"))
        data.density = load_indicator(table, "density", AggregateRule::PopulationWeightedMean,
                                      aliases, strict, nullptr);
    return data;
}

std::map<RegionKey, double> load_poverty_csv(const std::filesystem::path& path,
                                             const AliasTable& aliases, bool strict,
                                             std::vector<std::string>* warnings)
{
    CsvTable table = read_csv(path);
    return load_indicator(table, "rwi", AggregateRule::PopulationWeightedMean, aliases, strict,
                          warnings);
}

std::map<RegionKey, double> load_health_csv(const std::filesystem::path& path,
                                            const AliasTable& aliases, bool strict,
                                            std::vector<std::string>* warnings)
{
    CsvTable table = read_csv(path);
    size_t fac_col = table.column("facilities");
    for (size_t r = 0; r < table.rows.size(); ++r)
        check_count(table, r, parse_number(table, r, fac_col), "facility count");
    return load_indicator(table, "facilities", AggregateRule::Sum, aliases, strict, warnings);
}

std::map<RegionKey, double> load_age_csv(const std::filesystem::path& path,
                                         const AliasTable& aliases, bool strict,
                                         std::vector<std::string>* warnings)
{
    CsvTable table = read_csv(path);
    size_t share_col = table.column("age60_share");
    for (size_t r = 0; r < table.rows.size(); ++r) {
        double v = parse_number(table, r, share_col);
        if (v < 0.0 || v > 1.0)
            fail(Err::OutOfRangeShare, table.source + ":" + std::to_string(table.line_numbers[r]) +
                                           ": age60_share must lie in [0,1], got " + fmt_sig12(v));
    }
    return load_indicator(table, "age60_share", AggregateRule::PopulationWeightedMean, aliases,
                          strict, warnings);
}

} // namespace riskatlas
