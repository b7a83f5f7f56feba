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

#include "doily/contextuality.h"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace doily {

std::vector<bool> IncidenceSystem::apply(std::uint32_t x) const {
    std::vector<bool> out(rows.size());
    for (size_t l = 0; l < rows.size(); ++l) {
        out[l] = std::popcount(rows[l] & x) & 1;
    }
    return out;
}

IncidenceSystem doily_incidence() { return doily_incidence(0); }

IncidenceSystem doily_incidence(LineMask negative_lines) {
    const AbstractDoily& g = abstract_doily();
    IncidenceSystem sys;
    sys.points = kDoilyPoints;
    for (int l = 0; l < kDoilyLines; ++l) {
        sys.rows.push_back(g.line_points[static_cast<size_t>(l)]);
        sys.valuation.push_back(negative_lines >> l & 1);
    }
    return sys;
}

int degree(const IncidenceSystem& sys) {
    if (sys.points < 0 || sys.points > kMaxDegreePoints) {
        throw std::invalid_argument("degree search is limited to " + std::to_string(kMaxDegreePoints) + " points");
    }
    if (sys.valuation.size() != sys.rows.size()) {
        throw std::invalid_argument("valuation length differs from the number of lines");
    }
    // Transpose so flipping point p toggles a precomputed set of lines; the
    // Gray-code walk then costs one XOR per assignment. Lines are processed
    // in 64-bit blocks.
    const size_t blocks = (sys.rows.size() + 63) / 64;
    std::vector<std::uint64_t> residual(blocks, 0);
    for (size_t l = 0; l < sys.rows.size(); ++l) {
        if (sys.valuation[l]) residual[l / 64] |= std::uint64_t{1} << (l % 64);
    }
    std::vector<std::vector<std::uint64_t>> toggles(static_cast<size_t>(sys.points),
                                                    std::vector<std::uint64_t>(blocks, 0));
    for (size_t l = 0; l < sys.rows.size(); ++l) {
        for (int p = 0; p < sys.points; ++p) {
            if (sys.rows[l] >> p & 1) {
                toggles[static_cast<size_t>(p)][l / 64] |= std::uint64_t{1} << (l % 64);
            }
        }
    }
    auto weight = [&] {
        int w = 0;
        for (auto b : residual) w += std::popcount(b);
        return w;
    };
    int best = weight();
    const std::uint64_t n = std::uint64_t{1} << sys.points;
    for (std::uint64_t i = 1; i < n && best > 0; ++i) {
        const auto& t = toggles[static_cast<size_t>(std::countr_zero(i))];
        for (size_t b = 0; b < blocks; ++b) residual[b] ^= t[b];
        best = std::min(best, weight());
    }
    return best;
}

int degree(const Doily& d) { return degree(doily_incidence(valuation_of(d))); }

}  // namespace doily
