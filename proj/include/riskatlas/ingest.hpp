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

#pragma once

#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace riskatlas {

/// Canonical region identifier: lowercase, trimmed, alias-resolved.
using RegionKey = std::string;

/// Alias resolution table. When loaded from a file the set of canonical
/// names doubles as the region universe for strict-mode validation; the
/// built-in table only carries aliases and validates nothing.
struct AliasTable {
    std::map<std::string, std::string> aliases;
    std::set<std::string> canonical;

    bool has_universe() const { return !canonical.empty(); }

    /// Built-in default: common spellings of the federal capital territory.
    static AliasTable builtin();

    /// Loads a CSV with columns (alias,canonical), merged over the built-in
    /// defaults. Rejects alias chains (a canonical name that is itself an
    /// alias for something else).
    static AliasTable load(const std::filesystem::path& path);
};

/// Lowercases, trims, and collapses internal whitespace runs to one space.
std::string normalize_name(const std::string& raw);

/// Normalizes then resolves aliases. Idempotent. In strict mode an
/// unrecognized name throws UnknownRegion (only when the table declares a
/// region universe); in lenient mode the normalized name passes through
/// and a warning is appended.
RegionKey canonicalize_region_name(const std::string& raw, const AliasTable& table, bool strict,
                                   std::vector<std::string>* warnings = nullptr);

struct RawIndicatorRow {
    std::string region; // sub-unit or region name, as read
    double value = 0.0;
    std::optional<std::chrono::sys_days> date;
};

enum class AggregateRule {
    Sum,                    // counts: cases, facilities, population, area
    PopulationWeightedMean, // intensities: rwi, age structure
};

/// Rolls sub-unit rows up to region level. `mapping` sends each sub-unit
/// name to its RegionKey; the weighted-mean rule needs a population per
/// sub-unit in `weights`.
std::map<RegionKey, double> aggregate_subunits(const std::vector<RawIndicatorRow>& rows,
                                               const std::map<std::string, RegionKey>& mapping,
                                               AggregateRule rule,
                                               const std::map<std::string, double>* weights = nullptr);

/// Keeps only rows dated inside [year-01-01, year-12-31]; order preserved.
std::vector<RawIndicatorRow> align_year(const std::vector<RawIndicatorRow>& rows, int year);

/// One harmonized state-level row.
struct RegionRecord {
    RegionKey key;
    double population = 0.0;
    double area_km2 = 0.0;
    double density = 0.0; // recomputed as population / area_km2
    double rwi = 0.0;
    double facilities = 0.0;
    double age60_share = 0.0;
    double total_cases = 0.0;
};

/// Per-indicator maps ready for joining. `density` entries are advisory:
/// density is always recomputed and a mismatch beyond 1e-9 relative warns.
struct IndicatorSources {
    std::map<RegionKey, double> population;
    std::map<RegionKey, double> area_km2;
    std::map<RegionKey, double> density;
    std::map<RegionKey, double> rwi;
    std::map<RegionKey, double> facilities;
    std::map<RegionKey, double> age60_share;
    std::map<RegionKey, double> total_cases;
};

/// Inner join of the five sources on RegionKey. Keys missing an indicator
/// are excluded with a report line "EXCLUDED <key> missing <column>",
/// unless `impute_missing` fills the gap with the indicator mean.
std::vector<RegionRecord> build_region_table(const IndicatorSources& sources, bool impute_missing,
                                             std::vector<std::string>* exclusions,
                                             std::vector<std::string>* warnings);

/// Daily new-case rows per region, dates ascending.
using DailyCases = std::map<RegionKey, std::vector<std::pair<std::chrono::sys_days, double>>>;

/// cases.csv: region,date,new_cases. Rows for the same region and date sum.
DailyCases load_cases_csv(const std::filesystem::path& path, const AliasTable& aliases, bool strict,
                          int year, std::vector<std::string>* warnings);

struct PopulationData {
    std::map<RegionKey, double> population;
    std::map<RegionKey, double> area_km2;
    std::map<RegionKey, double> density; // only keys present in the file
};

/// population.csv: region,population,area_km2[,density].
PopulationData load_population_csv(const std::filesystem::path& path, const AliasTable& aliases,
                                   bool strict, std::vector<std::string>* warnings);

/// poverty.csv: region,rwi[,population]. Duplicate keys need the optional
/// population column for the weighted mean.
std::map<RegionKey, double> load_poverty_csv(const std::filesystem::path& path,
                                             const AliasTable& aliases, bool strict,
                                             std::vector<std::string>* warnings);

/// health.csv: region,facilities. Duplicates sum.
std::map<RegionKey, double> load_health_csv(const std::filesystem::path& path,
                                            const AliasTable& aliases, bool strict,
                                            std::vector<std::string>* warnings);

/// age.csv: region,age60_share[,population]. Shares must lie in [0,1].
std::map<RegionKey, double> load_age_csv(const std::filesystem::path& path,
                                         const AliasTable& aliases, bool strict,
                                         std::vector<std::string>* warnings);

} // namespace riskatlas
