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

#include <array>
#include <cstdint>
#include <string_view>

#include "doily/pauli.h"

namespace doily {

inline constexpr int kDoilyPoints = 15;
inline constexpr int kDoilyLines = 15;
inline constexpr int kDoilyOvoids = 6;
inline constexpr int kDoilyGrids = 10;
inline constexpr int kDoilyPerps = 15;

/// Bit mask over the 15 abstract lines (bit i = line i).
using LineMask = std::uint16_t;
/// Bit mask over the 15 abstract points (bit i = point i).
using PointMask = std::uint16_t;

/// Index of a two-qubit observable as an abstract doily point ("XI" -> 3).
/// Abstract point i is the two-qubit word i + 1.
int point_index(std::string_view two_letters);

struct CompletionStep {
    int first;
    int second;
    int result;
};

/// The two-qubit doily W(3,2) used as the template every N-qubit doily is a
/// labeling of. Lines are sorted triples of point indices in ascending order.
struct AbstractDoily {
    std::array<Word, kDoilyPoints> words;
    std::array<std::array<int, 3>, kDoilyLines> lines;
    std::array<PointMask, kDoilyLines> line_points;
    /// Lines through each point.
    std::array<std::array<int, 3>, kDoilyPoints> lines_through;
    std::array<PointMask, kDoilyPoints> collinear_with;

    std::array<std::array<int, 5>, kDoilyOvoids> ovoids;
    std::array<std::array<int, 9>, kDoilyGrids> grids;
    std::array<LineMask, kDoilyGrids> grid_lines;
    std::array<std::array<int, 7>, kDoilyPerps> perps;

    /// Points of the reference ovoid in ascending order: IX, IZ, XY, ZY, YY.
    std::array<int, 5> reference_ovoid;
    int reference_ovoid_index;
    /// XI, the unique center of the triad {IX, IZ, XY}.
    int reference_center;
    /// The nine lines (p, q, r) that fill in the labeling from a root.
    std::array<CompletionStep, 9> completion;
    /// The ovoid other than the reference one that contains IX.
    int other_ovoid_through_first;
    /// {XY, ZY, YI}, used for the linear/quadratic test.
    std::array<int, 3> tricentric_triad;

    /// Duad (i, j) of {1..6} for each point, i < j, in the duad/syntheme model.
    std::array<std::array<int, 2>, kDoilyPoints> duads;
};

const AbstractDoily& abstract_doily();

/// Index of the abstract line through two distinct collinear points, or -1.
int line_through(int p, int q);

}  // namespace doily
