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

#include "riskatlas/indicators.hpp"

#include <map>
#include <string>
#include <vector>

namespace riskatlas {

/// Factor weights: density (alpha), poverty (beta), healthcare (gamma),
/// age (delta). Each lies in [0,1] and they sum to 1 within 1e-12.
struct WeightVector {
    double alpha = 0.2;
    double beta = 0.4;
    double gamma = 0.3;
    double delta = 0.1;

    void validate() const; // throws WeightSumViolation
    static WeightVector defaults() { return {}; }
    static WeightVector checked(double a, double b, double g, double d);
};

enum class WeightComponent { Alpha, Beta, Gamma, Delta };

/// Sets one component to `value` and rescales the other three
/// proportionally so the sum stays 1.
WeightVector vary_weight(const WeightVector& base, WeightComponent which, double value);

/// Composite result for one region. The canonical score lives in [0,1]:
/// structural = alpha*density + beta*poverty + gamma*healthcare + delta*age,
/// score = structural * cases_norm.
struct ScoreResult {
    RegionKey key;
    double structural = 0.0;
    double score = 0.0;
    Tercile risk_class = Tercile::Low;
    int rank = 0;
    double case_share = 0.0;
};

/// Weighted sum of the four factors times the normalized case rate.
/// Classification and ranks are filled by the callers below.
std::map<RegionKey, ScoreResult> composite_score(const FactorTable& factors,
                                                 const WeightVector& weights);

/// Same split rule as density terciles, applied to score ranks.
std::map<RegionKey, Tercile> classify_percentile(const std::map<RegionKey, double>& scores);

/// Dense ranks 1..n, descending score, ties by canonical name ascending.
std::map<RegionKey, int> rank_regions(const std::map<RegionKey, double>& scores);

struct NationalSummary {
    double mean_score = 0.0;
    RegionKey max_region;
    double max_score = 0.0;
    double total_cases = 0.0;
    std::map<RegionKey, double> case_share; // fraction of national cases
    bool zero_cases = false;                // shares reported as 0 with a warning
};

NationalSummary national_summary(const std::map<RegionKey, double>& scores,
                                 const std::map<RegionKey, double>& cases);

/// Warnings for degenerate factor columns (constant input collapses a
/// factor to all-0, or all-1 after inversion).
std::vector<std::string> check_factor_degeneracy(const FactorTable& factors);

/// Full scoring pass: composite scores, percentile classes, ranks, and
/// case shares, sorted by rank.
std::vector<ScoreResult> score_regions(const FactorTable& factors, const WeightVector& weights,
                                       const std::map<RegionKey, double>& cases,
                                       NationalSummary* summary = nullptr);

} // namespace riskatlas
