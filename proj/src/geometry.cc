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

#include "doily/geometry.h"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace doily {

namespace {

// Line set of the two-qubit doily as drawn in its standard picture.
constexpr std::array<std::array<std::string_view, 3>, kDoilyLines> kLines = {{
    {"XI", "IX", "XX"}, {"XX", "YY", "ZZ"}, {"YX", "ZY", "XZ"}, {"XZ", "IZ", "XI"},
    {"ZZ", "ZI", "IZ"}, {"IX", "YI", "YX"}, {"XZ", "ZX", "YY"}, {"XX", "YZ", "ZY"},
    {"XI", "IY", "XY"}, {"ZZ", "XY", "YX"}, {"ZX", "IX", "ZI"}, {"YI", "IZ", "YZ"},
    {"ZI", "ZY", "IY"}, {"YZ", "XY", "ZX"}, {"IY", "YY", "YI"},
}};

constexpr std::array<std::array<std::string_view, 3>, 9> kCompletion = {{
    {"XI", "IX", "XX"}, {"XI", "IZ", "XZ"}, {"XI", "XY", "IY"},
    {"ZY", "XX", "YZ"}, {"ZY", "XZ", "YX"}, {"ZY", "IY", "ZI"},
    {"YY", "XX", "ZZ"}, {"YY", "XZ", "ZX"}, {"YY", "IY", "YI"},
}};

// Sylvester's duad labels of the same fifteen points.
constexpr std::array<std::pair<std::string_view, std::string_view>, kDoilyPoints> kDuads = {{
    {"XI", "25"}, {"XY", "34"}, {"IY", "16"}, {"XX", "36"}, {"ZY", "24"},
    {"YZ", "15"}, {"ZZ", "12"}, {"IZ", "46"}, {"ZI", "35"}, {"YX", "56"},
    {"IX", "14"}, {"YI", "23"}, {"XZ", "13"}, {"YY", "45"}, {"ZX", "26"},
}};

template <size_t K>
std::array<int, K> members(PointMask mask) {
    std::array<int, K> out{};
    size_t n = 0;
    for (int p = 0; p < kDoilyPoints; ++p) {
        if (mask >> p & 1) {
            out.at(n++) = p;
        }
    }
    if (n != K) {
        throw InvariantViolation("unexpected hyperplane size");
    }
    return out;
}

AbstractDoily build() {
    AbstractDoily d{};
    for (int p = 0; p < kDoilyPoints; ++p) {
        d.words[p] = static_cast<Word>(p + 1);
    }

    std::array<std::array<int, 3>, kDoilyLines> lines{};
    for (size_t i = 0; i < kLines.size(); ++i) {
        for (size_t j = 0; j < 3; ++j) {
            lines[i][j] = point_index(kLines[i][j]);
        }
        std::sort(lines[i].begin(), lines[i].end());
    }
    std::sort(lines.begin(), lines.end());
    d.lines = lines;

    std::array<int, kDoilyPoints> through_count{};
    for (int l = 0; l < kDoilyLines; ++l) {
        PointMask m = 0;
        for (int p : d.lines[l]) {
            m |= static_cast<PointMask>(1u << p);
            d.lines_through[p][through_count[p]++] = l;
        }
        d.line_points[l] = m;
        for (int p : d.lines[l]) {
            d.collinear_with[p] |= static_cast<PointMask>(m & ~(1u << p));
        }
    }

    // Geometric hyperplanes: point sets meeting every line in 1 or 3 points.
    int ovoids = 0, grids = 0, perps = 0;
    for (unsigned m = 1; m < (1u << kDoilyPoints) - 1; ++m) {
        bool ok = true;
        for (PointMask lp : d.line_points) {
            int k = std::popcount(m & lp);
            if (k != 1 && k != 3) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        const auto mask = static_cast<PointMask>(m);
        switch (std::popcount(m)) {
            case 5: d.ovoids.at(ovoids++) = members<5>(mask); break;
            case 7: d.perps.at(perps++) = members<7>(mask); break;
            case 9: {
                d.grids.at(grids) = members<9>(mask);
                LineMask lm = 0;
                for (int l = 0; l < kDoilyLines; ++l) {
                    if ((d.line_points[l] & ~mask) == 0) {
                        lm |= static_cast<LineMask>(1u << l);
                    }
                }
                d.grid_lines[grids++] = lm;
                break;
            }
            default: throw InvariantViolation("unexpected hyperplane size");
        }
    }
    if (ovoids != kDoilyOvoids || grids != kDoilyGrids || perps != kDoilyPerps) {
        throw InvariantViolation("abstract doily hyperplane census is wrong");
    }

    d.reference_ovoid = {point_index("IX"), point_index("IZ"), point_index("XY"), point_index("ZY"),
                         point_index("YY")};
    d.reference_center = point_index("XI");
    d.reference_ovoid_index = -1;
    d.other_ovoid_through_first = -1;
    for (int o = 0; o < kDoilyOvoids; ++o) {
        auto sorted = d.reference_ovoid;
        std::sort(sorted.begin(), sorted.end(),
                  [&](int a, int b) { return d.words[a] < d.words[b]; });
        std::array<int, 5> pts = d.ovoids[o];
        std::sort(pts.begin(), pts.end(),
                  [&](int a, int b) { return d.words[a] < d.words[b]; });
        if (pts == sorted) {
            d.reference_ovoid_index = o;
        } else if (std::find(pts.begin(), pts.end(), d.reference_ovoid[0]) != pts.end()) {
            d.other_ovoid_through_first = o;
        }
    }
    if (d.reference_ovoid_index < 0 || d.other_ovoid_through_first < 0) {
        throw InvariantViolation("reference ovoid is not an ovoid of the abstract doily");
    }

    for (size_t i = 0; i < kCompletion.size(); ++i) {
        d.completion[i] = {point_index(kCompletion[i][0]), point_index(kCompletion[i][1]),
                           point_index(kCompletion[i][2])};
    }
    d.tricentric_triad = {point_index("XY"), point_index("ZY"), point_index("YI")};

    for (const auto& [label, duad] : kDuads) {
        d.duads[point_index(label)] = {duad[0] - '0', duad[1] - '0'};
    }
    return d;
}

}  // namespace

int point_index(std::string_view two_letters) {
    const Observable o = Observable::parse(two_letters);
    if (o.qubits() != 2) {
        throw std::invalid_argument("abstract doily points are two-qubit words: " +
                                    std::string(two_letters));
    }
    return static_cast<int>(o.word()) - 1;
}

const AbstractDoily& abstract_doily() {
    static const AbstractDoily instance = build();
    return instance;
}

int line_through(int p, int q) {
    const AbstractDoily& d = abstract_doily();
    for (int l : d.lines_through[p]) {
        if (d.line_points[l] >> q & 1) {
            return p == q ? -1 : l;
        }
    }
    return -1;
}

}  // namespace doily
