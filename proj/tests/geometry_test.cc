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

#include <bit>
#include <set>

#include "doctest.h"
#include "doily/geometry.h"
#include "doily/pauli.h"

using namespace doily;

namespace {

PointMask mask_of(const auto& points) {
    PointMask m = 0;
    for (int p : points) m |= static_cast<PointMask>(1u << p);
    return m;
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("points are the fifteen two-qubit observables") {
    const AbstractDoily& g = abstract_doily();
    std::set<Word> seen(g.words.begin(), g.words.end());
    CHECK(seen.size() == 15);
    CHECK(point_index("XI") == static_cast<int>(Observable::parse("XI").word()) - 1);
    CHECK(word_to_string(g.words[static_cast<size_t>(point_index("ZY"))], 2) == "ZY");
}

TEST_CASE("incidence: three points per line, three lines per point, no triangles") {
    const AbstractDoily& g = abstract_doily();
    std::array<int, kDoilyPoints> degree{};
    for (const auto& line : g.lines) {
        CHECK(line[0] < line[1]);
        CHECK(line[1] < line[2]);
        for (int p : line) ++degree[static_cast<size_t>(p)];
    }
    for (int d : degree) CHECK(d == 3);
    for (size_t a = 0; a < g.lines.size(); ++a) {
        for (size_t b = a + 1; b < g.lines.size(); ++b) {
            CHECK(std::popcount(static_cast<unsigned>(g.line_points[a] & g.line_points[b])) <= 1);
        }
    }
    // No triangle: three pairwise collinear points always share one line.
    for (int p = 0; p < kDoilyPoints; ++p) {
        for (int q = p + 1; q < kDoilyPoints; ++q) {
            for (int r = q + 1; r < kDoilyPoints; ++r) {
                const bool pq = g.collinear_with[static_cast<size_t>(p)] >> q & 1;
                const bool qr = g.collinear_with[static_cast<size_t>(q)] >> r & 1;
                const bool pr = g.collinear_with[static_cast<size_t>(p)] >> r & 1;
                if (pq && qr && pr) {
                    CHECK(line_through(p, q) == line_through(q, r));
                }
            }
        }
    }
}

TEST_CASE("lines are commuting triples closed under product") {
    const AbstractDoily& g = abstract_doily();
    for (const auto& line : g.lines) {
        const Word a = g.words[static_cast<size_t>(line[0])];
        const Word b = g.words[static_cast<size_t>(line[1])];
        const Word c = g.words[static_cast<size_t>(line[2])];
        CHECK(word::commute(a, b));
        CHECK((a ^ b ^ c) == 0);
    }
}

TEST_CASE("hyperplanes: six ovoids, ten grids, fifteen perp-sets") {
    const AbstractDoily& g = abstract_doily();
    auto check_hyperplane = [&](PointMask h) {
        for (PointMask line : g.line_points) {
            const int k = std::popcount(static_cast<unsigned>(h & line));
            CHECK((k == 1 || k == 3));
        }
    };
    std::set<PointMask> distinct;
    for (const auto& o : g.ovoids) {
        check_hyperplane(mask_of(o));
        distinct.insert(mask_of(o));
    }
    for (size_t k = 0; k < g.grids.size(); ++k) {
        check_hyperplane(mask_of(g.grids[k]));
        distinct.insert(mask_of(g.grids[k]));
        CHECK(std::popcount(static_cast<unsigned>(g.grid_lines[k])) == 6);
    }
    for (const auto& p : g.perps) {
        check_hyperplane(mask_of(p));
        distinct.insert(mask_of(p));
    }
    CHECK(distinct.size() == 31);
    // Each point lies on exactly two ovoids.
    for (int p = 0; p < kDoilyPoints; ++p) {
        int n = 0;
        for (const auto& o : g.ovoids) n += (mask_of(o) >> p & 1);
        CHECK(n == 2);
    }
}

TEST_CASE("reference ovoid, center and completion order") {
    const AbstractDoily& g = abstract_doily();
    std::set<std::string> o2;
    for (int p : g.reference_ovoid) o2.insert(word_to_string(g.words[static_cast<size_t>(p)], 2));
    CHECK(o2 == std::set<std::string>{"IX", "IZ", "XY", "ZY", "YY"});
    CHECK(g.reference_center == point_index("XI"));
    CHECK(mask_of(g.ovoids[static_cast<size_t>(g.reference_ovoid_index)]) == mask_of(g.reference_ovoid));

    PointMask assigned = mask_of(g.reference_ovoid) | static_cast<PointMask>(1u << g.reference_center);
    for (const auto& step : g.completion) {
        CHECK((assigned >> step.first & 1));
        CHECK((assigned >> step.second & 1));
        CHECK_FALSE((assigned >> step.result & 1));
        const int l = line_through(step.first, step.second);
        REQUIRE(l >= 0);
        CHECK((g.line_points[static_cast<size_t>(l)] >> step.result & 1));
        assigned |= static_cast<PointMask>(1u << step.result);
    }
    CHECK(assigned == 0x7FFF);
    CHECK(word_to_string(g.words[static_cast<size_t>(g.completion[0].result)], 2) == "XX");
}

TEST_CASE("tricentric triad") {
    const AbstractDoily& g = abstract_doily();
    std::set<std::string> t;
    for (int p : g.tricentric_triad) t.insert(word_to_string(g.words[static_cast<size_t>(p)], 2));
    CHECK(t == std::set<std::string>{"XY", "ZY", "YI"});
    // Pairwise non-collinear with three common neighbours.
    const PointMask common = g.collinear_with[static_cast<size_t>(g.tricentric_triad[0])] &
                             g.collinear_with[static_cast<size_t>(g.tricentric_triad[1])] &
                             g.collinear_with[static_cast<size_t>(g.tricentric_triad[2])];
    CHECK(std::popcount(static_cast<unsigned>(common)) == 3);
}

}  // TEST_SUITE
