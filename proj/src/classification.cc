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

#include "doily/classification.h"

#include <bit>
#include <stdexcept>

namespace doily {

namespace {

constexpr std::array<std::string_view, kNegLineConfigs> kTags = {
    "3", "4", "5", "6", "7A", "7B", "8A", "8B", "9", "10", "11", "12",
};

constexpr std::array<int, kNegLineConfigs> kCounts = {3, 4, 5, 6, 7, 7, 8, 8, 9, 10, 11, 12};

using Triple = std::array<std::string_view, 3>;

// Negative lines of one representative per configuration, on the abstract
// doily's two-qubit labels.
const std::array<std::vector<Triple>, kNegLineConfigs>& reference_lines() {
    static const std::array<std::vector<Triple>, kNegLineConfigs> lines = {{
        {{"XX", "YY", "ZZ"}, {"XZ", "YX", "ZY"}, {"XY", "YZ", "ZX"}},
        {{"XX", "YY", "ZZ"}, {"XY", "YX", "ZZ"}, {"XZ", "YX", "ZY"}, {"IY", "XI", "XY"}},
        {{"IX", "XI", "XX"}, {"XX", "YY", "ZZ"}, {"XY", "YX", "ZZ"}, {"XZ", "YX", "ZY"}, {"IZ", "XI", "XZ"}},
        {{"IX", "XI", "XX"}, {"XX", "YY", "ZZ"}, {"XZ", "YX", "ZY"}, {"IZ", "XI", "XZ"}, {"IY", "XI", "XY"},
         {"XY", "YZ", "ZX"}},
        // 7A
        {{"IX", "XI", "XX"}, {"XY", "YX", "ZZ"}, {"IZ", "XI", "XZ"}, {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"},
         {"IY", "ZI", "ZY"}, {"IY", "YI", "YY"}},
        // 7B
        {{"XX", "YY", "ZZ"}, {"XY", "YX", "ZZ"}, {"XZ", "YX", "ZY"}, {"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"},
         {"XZ", "YY", "ZX"}, {"XX", "YZ", "ZY"}},
        // 8A
        {{"XX", "YY", "ZZ"}, {"XZ", "YX", "ZY"}, {"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"}, {"XZ", "YY", "ZX"},
         {"XX", "YZ", "ZY"}, {"IY", "XI", "XY"}, {"XY", "YZ", "ZX"}},
        // 8B
        {{"IX", "XI", "XX"}, {"IZ", "XI", "XZ"}, {"IY", "XI", "XY"}, {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"},
         {"IY", "ZI", "ZY"}, {"XY", "YZ", "ZX"}, {"IY", "YI", "YY"}},
        // 9
        {{"XY", "YX", "ZZ"}, {"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"}, {"XZ", "YY", "ZX"}, {"XX", "YZ", "ZY"},
         {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"}, {"IY", "ZI", "ZY"}, {"IY", "YI", "YY"}},
        // 10
        {{"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"}, {"XZ", "YY", "ZX"}, {"XX", "YZ", "ZY"}, {"IY", "XI", "XY"},
         {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"}, {"IY", "ZI", "ZY"}, {"XY", "YZ", "ZX"}, {"IY", "YI", "YY"}},
        // 11
        {{"IX", "XI", "XX"}, {"IZ", "XI", "XZ"}, {"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"}, {"XZ", "YY", "ZX"},
         {"XX", "YZ", "ZY"}, {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"}, {"IY", "ZI", "ZY"}, {"XY", "YZ", "ZX"},
         {"IY", "YI", "YY"}},
        // 12
        {{"IX", "XI", "XX"}, {"XY", "YX", "ZZ"}, {"IZ", "XI", "XZ"}, {"IZ", "ZI", "ZZ"}, {"IX", "YI", "YX"},
         {"XZ", "YY", "ZX"}, {"XX", "YZ", "ZY"}, {"IY", "XI", "XY"}, {"IX", "ZI", "ZX"}, {"IZ", "YI", "YZ"},
         {"IY", "ZI", "ZY"}, {"IY", "YI", "YY"}},
    }};
    return lines;
}

size_t index_of(NegLineConfig c) { return static_cast<size_t>(c); }

}  // namespace

std::string_view to_string(NegLineConfig c) { return kTags.at(index_of(c)); }

std::optional<NegLineConfig> parse_neg_line_config(std::string_view tag) {
    for (size_t i = 0; i < kTags.size(); ++i) {
        if (kTags[i] == tag) {
            return static_cast<NegLineConfig>(i);
        }
    }
    return std::nullopt;
}

int negative_line_count(NegLineConfig c) { return kCounts.at(index_of(c)); }

NegLineConfig complement(NegLineConfig c) {
    switch (c) {
        case NegLineConfig::k7A: return NegLineConfig::k8A;
        case NegLineConfig::k7B: return NegLineConfig::k8B;
        case NegLineConfig::k8A: return NegLineConfig::k7A;
        case NegLineConfig::k8B: return NegLineConfig::k7B;
        default: return parse_neg_line_config(std::to_string(15 - negative_line_count(c))).value();
    }
}

int line_coverage(LineMask lines) {
    const AbstractDoily& g = abstract_doily();
    PointMask covered = 0;
    for (int l = 0; l < kDoilyLines; ++l) {
        if (lines >> l & 1) {
            covered |= g.line_points[static_cast<size_t>(l)];
        }
    }
    return std::popcount(covered);
}

NegLineConfig config_of_valuation(LineMask negative_lines) {
    const int count = std::popcount(negative_lines);
    switch (count) {
        case 3: return NegLineConfig::k3;
        case 4: return NegLineConfig::k4;
        case 5: return NegLineConfig::k5;
        case 6: return NegLineConfig::k6;
        case 9: return NegLineConfig::k9;
        case 10: return NegLineConfig::k10;
        case 11: return NegLineConfig::k11;
        case 12: return NegLineConfig::k12;
        case 7:
        case 8: {
            const int coverage = line_coverage(negative_lines);
            if (count == 7 && coverage == kCoverage7A) return NegLineConfig::k7A;
            if (count == 7 && coverage == kCoverage7B) return NegLineConfig::k7B;
            if (count == 8 && coverage == kCoverage8A) return NegLineConfig::k8A;
            if (count == 8 && coverage == kCoverage8B) return NegLineConfig::k8B;
            throw InvariantViolation(std::to_string(count) + " negative lines covering " +
                                     std::to_string(coverage) + " points match no configuration");
        }
        default:
            throw InvariantViolation(std::to_string(count) + " negative lines is not a doily configuration");
    }
}

LineMask reference_pattern(NegLineConfig c) {
    LineMask m = 0;
    for (const Triple& t : reference_lines().at(index_of(c))) {
        const int l = line_through(point_index(t[0]), point_index(t[1]));
        if (l < 0 || !(abstract_doily().line_points[static_cast<size_t>(l)] >> point_index(t[2]) & 1)) {
            throw InvariantViolation("reference pattern names a non-line");
        }
        m |= static_cast<LineMask>(1u << l);
    }
    return m;
}

std::string_view to_string(Character c) { return c == Character::linear ? "l" : "q"; }

std::string_view to_string(QuadricClass q) {
    switch (q) {
        case QuadricClass::ovoidal: return "ovoidal";
        case QuadricClass::perpial: return "perpial";
        case QuadricClass::gridal: return "gridal";
        case QuadricClass::special: return "special";
    }
    return "?";
}

std::string Signature::str() const {
    std::string s;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(counts[i]);
    }
    return s;
}

Signature signature_of(const Doily& d) {
    Signature s;
    s.counts.assign(static_cast<size_t>(d.qubits()), 0);
    for (Word w : d.labels()) {
        s.counts.at(static_cast<size_t>(word::non_identity_count(w) - 1))++;
    }
    return s;
}

LineSign line_sign(const Doily& d, int abstract_line) {
    const auto& line = abstract_doily().lines.at(static_cast<size_t>(abstract_line));
    const Word a = d.word(line[0]), b = d.word(line[1]), c = d.word(line[2]);
    // a.b = i^k (a^b), and (a^b).c = +I when c = a^b.
    const int k = (word::product_phase(a, b) + word::product_phase(a ^ b, c)) & 3;
    if ((a ^ b ^ c) != 0 || (k & 1)) {
        throw InvariantViolation("line product is not +-identity");
    }
    return k == 0 ? LineSign::positive : LineSign::negative;
}

LineMask valuation_of(const Doily& d) {
    LineMask m = 0;
    for (int l = 0; l < kDoilyLines; ++l) {
        if (line_sign(d, l) == LineSign::negative) {
            m |= static_cast<LineMask>(1u << l);
        }
    }
    return m;
}

NegLineConfig neg_config(const Doily& d) { return config_of_valuation(valuation_of(d)); }

bool is_linear(const Doily& d) {
    const auto& t = abstract_doily().tricentric_triad;
    const Word a = d.word(t[0]), b = d.word(t[1]), c = d.word(t[2]);
    const int k = (word::product_phase(a, b) + word::product_phase(a ^ b, c)) & 3;
    if ((a ^ b ^ c) != 0) {
        return false;
    }
    if ((k & 1) == 0) {
        throw InvariantViolation("tricentric triad multiplies to a real multiple of the identity");
    }
    return true;
}

bool on_distinguished_quadric(Word w) {
    const int n = word::non_identity_count(w);
    return n > 0 && n % 2 == 0;
}

QuadricClass quadric_class(const Doily& d) {
    if (d.qubits() != 5) {
        throw std::invalid_argument("the quadric classification is defined for five qubits only");
    }
    int m = 0;
    for (Word w : d.labels()) {
        m += on_distinguished_quadric(w) ? 1 : 0;
    }
    switch (m) {
        case 5: return QuadricClass::ovoidal;
        case 7: return QuadricClass::perpial;
        case 9: return QuadricClass::gridal;
        case 15: return QuadricClass::special;
        default:
            throw InvariantViolation(std::to_string(m) + " doily points on the quadric is not a hyperplane");
    }
}

Classification classify(const Doily& d) {
    Classification c;
    c.signature = signature_of(d);
    c.character = is_linear(d) ? Character::linear : Character::quadratic;
    c.valuation = valuation_of(d);
    c.config = config_of_valuation(c.valuation);
    if (d.qubits() == 5) {
        c.quadric = quadric_class(d);
    }
    return c;
}

std::array<Doily, kDoilyOvoids> hexad(const Doily& d) {
    if (is_linear(d)) {
        throw std::invalid_argument("hexads are defined for quadratic doilies");
    }
    const auto ovoids = ovoids_of(d);
    std::array<Doily, kDoilyOvoids> out;
    for (size_t i = 0; i < ovoids.size(); ++i) {
        out[i] = linear_doily_from_ovoid(ovoids[i]);
    }
    return out;
}

}  // namespace doily
