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

#include <stdexcept>
#include <string>

namespace riskatlas {

/// Machine-readable failure categories. Every error the library throws
/// carries one of these so callers can branch without parsing messages.
enum class Err {
    ParseError,
    IoError,
    BadConfig,
    MissingColumn,
    InvalidValue,
    UnknownRegion,
    InvalidAliasTable,
    MissingMapping,
    ZeroWeight,
    EmptyJoin,
    NonFiniteInput,
    ZeroPopulation,
    OutOfRangeShare,
    NonPositiveDensity,
    TooFewRegions,
    WeightSumViolation,
    MissingFactor,
    LengthMismatch,
    ConstantInput,
    RankDeficient,
    TooFewObservations,
    UnsortedInput,
    MissingTercile,
    MissingNameProperty,
    DegenerateRing,
    EmptyInput,
};

const char* err_name(Err code);

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& message)
        : std::runtime_error(std::string(err_name(code)) + ": " + message), code_(code) {}

    Err code() const noexcept { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& message)
{
    throw Error(code, message);
}

inline const char* err_name(Err code)
{
    switch (code) {
    case Err::ParseError: return "ParseError";
    case Err::IoError: return "IoError";
    case Err::BadConfig: return "BadConfig";
    case Err::MissingColumn: return "MissingColumn";
    case Err::InvalidValue: return "InvalidValue";
    case Err::UnknownRegion: return "UnknownRegion";
    case Err::InvalidAliasTable: return "InvalidAliasTable";
    case Err::MissingMapping: return "MissingMapping";
    case Err::ZeroWeight: return "ZeroWeight";
    case Err::EmptyJoin: return "EmptyJoin";
    case Err::NonFiniteInput: return "NonFiniteInput";
    case Err::ZeroPopulation: return "ZeroPopulation";
    case Err::OutOfRangeShare: return "OutOfRangeShare";
    case Err::NonPositiveDensity: return "NonPositiveDensity";
    case Err::TooFewRegions: return "TooFewRegions";
    case Err::WeightSumViolation: return "WeightSumViolation";
    case Err::MissingFactor: return "MissingFactor";
    case Err::LengthMismatch: return "LengthMismatch";
    case Err::ConstantInput: return "ConstantInput";
    case Err::RankDeficient: return "RankDeficient";
    case Err::TooFewObservations: return "TooFewObservations";
    case Err::UnsortedInput: return "UnsortedInput";
    case Err::MissingTercile: return "MissingTercile";
    case Err::MissingNameProperty: return "MissingNameProperty";
    case Err::DegenerateRing: return "DegenerateRing";
    case Err::EmptyInput: return "EmptyInput";
    }
    return "Error";
}

} // namespace riskatlas
