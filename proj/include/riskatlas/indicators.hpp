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

#include "riskatlas/ingest.hpp"

#include <map>
#include <string>
#include <vector>

namespace riskatlas {

/// Min-max rescaling to [0,1]. A degenerate range (max == min) maps every
/// value to 0: a constant indicator carries no ranking information.
std::map<RegionKey, double> min_max_normalize(const std::map<RegionKey, double>& values);

/// 1 - minmax(rwi): the wealthiest region scores 0, the poorest 1.
std::map<RegionKey, double> poverty_factor(const std::map<RegionKey, double>& rwi);

/// Facilities per 100,000 persons, inverted: worse access scores higher.
/// Inversion is the one switchable direction decision in the factor set;
/// it lives here and nowhere else.
std::map<RegionKey, double> healthcare_factor(const std::map<RegionKey, double>& facilities,
                                              const std::map<RegionKey, double>& population);

/// minmax(share of population aged 60+).
std::map<RegionKey, double> age_factor(const std::map<RegionKey, double>& age60_share);

/// minmax(persons per km^2).
std::map<RegionKey, double> density_factor(const std::map<RegionKey, double>& density);

/// (cases / population) * 100,000.
double cases_per_100k(double cases, double population);

/// Min-max over the observed case rates; identical contract to
/// min_max_normalize.
std::map<RegionKey, double> normalize_case_rates(const std::map<RegionKey, double>& rates);

enum class Tercile { Low, Medium, High };

const char* tercile_name(Tercile t);

/// Ascending-rank thirds: the sorted order splits at floor(n/3) and
/// floor(2n/3); ties broken by canonical name. Class sizes never differ
/// by more than one.
std::map<RegionKey, Tercile> density_terciles(const std::map<RegionKey, double>& density);

/// Shared split rule for density terciles and score percentile classes.
std::map<RegionKey, Tercile> rank_terciles(const std::map<RegionKey, double>& values);

/// Per-region normalized factor scores plus the case-rate columns.
struct FactorRow {
    double density_score = 0.0;
    double poverty_score = 0.0;
    double healthcare_score = 0.0;
    double age_score = 0.0;
    double cases_per_100k = 0.0;
    double cases_norm = 0.0;
};

using FactorTable = std::map<RegionKey, FactorRow>;

/// Derives the full factor table from harmonized records.
FactorTable build_factor_table(const std::vector<RegionRecord>& records);

} // namespace riskatlas
