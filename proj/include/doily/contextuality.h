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
#include <vector>

#include "doily/classification.h"

namespace doily {

/// Largest point count accepted by degree().
inline constexpr int kMaxDegreePoints = 24;

/// A point-line incidence matrix over GF(2) with a sign per line.
/// rows[l] has bit p set when point p lies on line l; bit l of valuation is
/// set when line l is negative.
struct IncidenceSystem {
    int points = 0;
    std::vector<std::uint32_t> rows;
    std::vector<bool> valuation;

    int lines() const { return static_cast<int>(rows.size()); }
    /// A.x for a point assignment x.
    std::vector<bool> apply(std::uint32_t x) const;
};

/// The 15x15 incidence of the abstract doily with an all-positive valuation.
IncidenceSystem doily_incidence();

/// The abstract doily's incidence with the given negative lines.
IncidenceSystem doily_incidence(LineMask negative_lines);

/// Minimum Hamming distance between A.x and the valuation over all x.
/// Throws std::invalid_argument when points exceeds kMaxDegreePoints or the
/// valuation length differs from the row count.
int degree(const IncidenceSystem& sys);

/// Degree of a doily's own sign pattern.
int degree(const Doily& d);

}  // namespace doily
