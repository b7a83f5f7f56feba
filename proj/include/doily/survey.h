// Copyright 2026 The Doily Engine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "doily/enumeration.h"
#include "doily/properties.h"
#include "doily/type_table.h"

namespace doily {

struct SurveyOptions {
    int qubits = 3;
    unsigned threads = 0;
    std::optional<std::uint64_t> limit;
    /// Run the per-doily property suite (costly at five qubits).
    bool properties = false;
    /// Run the five-qubit quadric checks on every doily when qubits == 5.
    bool quadric_checks = true;
    /// Compute the contextuality degree of every doily's valuation.
    bool contextuality = false;
};

struct SurveyResult {
    TypeTable table;
    PropertyTally properties;
    EnumerationReport report;
    /// Doilies whose degree differed from 3, and the first such point set.
    std::uint64_t degree_violations = 0;
    std::optional<std::string> first_degree_violation;
    /// Distinct valuations seen, each evaluated once.
    std::uint64_t distinct_valuations = 0;
};

/// Enumerates every doily once with per-worker accumulators and merges them.
SurveyResult survey(const SurveyOptions& options);

}  // namespace doily
