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

#include "riskatlas/indicators.hpp"
#include "riskatlas/errors.hpp"

#include <algorithm>
#include <cmath>

namespace riskatlas {

std::map<RegionKey, double> min_max_normalize(const std::map<RegionKey, double>& values)
{
    if (values.empty()) fail(Err::EmptyInput, "min_max_normalize: no values");
    double lo = values.begin()->second;
    double hi = lo;
    for (const auto& [key, v] : values) {
        if (!std::isfinite(v))
            fail(Err::NonFiniteInput, "min_max_normalize: non-finite value for '" + key + "'");
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    std::map<RegionKey, double> out;
    const double range = hi - lo;
    for (const auto& [key, v] : values) out[key] = range == 0.0 ? 0.0 : (v - lo) / range;
    return out;
}

std::map<RegionKey, double> poverty_factor(const std::map<RegionKey, double>& rwi)
{
    auto out = min_max_normalize(rwi);
    for (auto& [_, v] : out) v = 1.0 - v;
    return out;
}

std::map<RegionKey, double> healthcare_factor(const std::map<RegionKey, double>& facilities,
                                              const std::map<RegionKey, double>& population)
{
    std::map<RegionKey, double> access;
    for (const auto& [key, fac] : facilities) {
        auto pop = population.find(key);
        if (pop == population.end())
            fail(Err::ZeroPopulation, "healthcare_factor: no population for '" + key + "'");
        access[key] = cases_per_100k(fac, pop->second); // same per-100k ratio
    }
    auto out = min_max_normalize(access);
    for (auto& [_, v] : out) v = 1.0 - v;
    return out;
}

std::map<RegionKey, double> age_factor(const std::map<RegionKey, double>& age60_share)
{
    for (const auto& [key, v] : age60_share)
        if (v < 0.0 || v > 1.0)
            fail(Err::OutOfRangeShare, "age_factor: share for '" + key + "' outside [0,1]");
    return min_max_normalize(age60_share);
}

std::map<RegionKey, double> density_factor(const std::map<RegionKey, double>& density)
{
    for (const auto& [key, v] : density)
        if (v <= 0.0)
            fail(Err::NonPositiveDensity, "density_factor: density for '" + key + "' must be > 0");
    return min_max_normalize(density);
}

double cases_per_100k(double cases, double population)
{
    if (population <= 0.0) fail(Err::ZeroPopulation, "cases_per_100k: population must be > 0");
    return cases / population * 100000.0;
}

std::map<RegionKey, double> normalize_case_rates(const std::map<RegionKey, double>& rates)
{
    return min_max_normalize(rates);
}

const char* tercile_name(Tercile t)
{
    switch (t) {
    case Tercile::Low: return "low";
    case Tercile::Medium: return "medium";
    case Tercile::High: return "high";
    }
    return "?";
}

std::map<RegionKey, Tercile> rank_terciles(const std::map<RegionKey, double>& values)
{
    const size_t n = values.size();
    if (n < 3) fail(Err::TooFewRegions, "tercile split needs at least 3 regions");

    std::vector<std::pair<double, RegionKey>> order;
    order.reserve(n);
    for (const auto& [key, v] : values) order.emplace_back(v, key);
    std::sort(order.begin(), order.end()); // value ascending, then name ascending

    const size_t first = n / 3;
    const size_t second = 2 * n / 3;
    std::map<RegionKey, Tercile> out;
    for (size_t i = 0; i < n; ++i) {
        Tercile t = i < first ? Tercile::Low : (i < second ? Tercile::Medium : Tercile::High);
        out[order[i].second] = t;
    }
    return out;
}

std::map<RegionKey, Tercile> density_terciles(const std::map<RegionKey, double>& density)
{
    return rank_terciles(density);
}

FactorTable build_factor_table(const std::vector<RegionRecord>& records)
{
    std::map<RegionKey, double> density, rwi, facilities, population, age, rates;
    for (const auto& rec : records) {
        density[rec.key] = rec.density;
        rwi[rec.key] = rec.rwi;
        facilities[rec.key] = rec.facilities;
        population[rec.key] = rec.population;
        age[rec.key] = rec.age60_share;
        rates[rec.key] = cases_per_100k(rec.total_cases, rec.population);
    }

    auto d = density_factor(density);
    auto p = poverty_factor(rwi);
    auto h = healthcare_factor(facilities, population);
    auto a = age_factor(age);
    auto c = normalize_case_rates(rates);

    FactorTable table;
    for (const auto& rec : records) {
        FactorRow row;
        row.density_score = d[rec.key];
        row.poverty_score = p[rec.key];
        row.healthcare_score = h[rec.key];
        row.age_score = a[rec.key];
        row.cases_per_100k = rates[rec.key];
        row.cases_norm = c[rec.key];
        table[rec.key] = row;
    }
    return table;
}

} // namespace riskatlas
