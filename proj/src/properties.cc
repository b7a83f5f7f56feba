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

#include "doily/properties.h"

#include <bit>

namespace doily {

namespace {

std::optional<std::string> gq_axiom(const Doily& d) {
    const AbstractDoily& g = abstract_doily();
    for (int l = 0; l < kDoilyLines; ++l) {
        const PointMask on = g.line_points[static_cast<size_t>(l)];
        for (int p = 0; p < kDoilyPoints; ++p) {
            if (on >> p & 1) continue;
            int commuting = 0;
            for (int q : g.lines[static_cast<size_t>(l)]) {
                commuting += word::commute(d.word(p), d.word(q)) ? 1 : 0;
            }
            if (commuting != 1) {
                return d.at(p).str() + " commutes with " + std::to_string(commuting) + " points of line " +
                       std::to_string(l);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> real_line_phase(const Doily& d) {
    const AbstractDoily& g = abstract_doily();
    for (int l = 0; l < kDoilyLines; ++l) {
        const auto& line = g.lines[static_cast<size_t>(l)];
        PhasedProduct prod = multiply(d.at(line[0]), d.at(line[1]));
        prod = multiply(prod, d.at(line[2]));
        if (!prod.is_identity() || (prod.phase_exp & 1)) {
            return "line " + std::to_string(l) + " multiplies to " + prod.str();
        }
    }
    return std::nullopt;
}

std::optional<std::string> ovoids_valid(const Doily& d) {
    for (const Ovoid& o : ovoids_of(d)) {
        if (auto why = ovoid_violation(o.words())) {
            return o.str() + ": " + *why;
        }
    }
    return std::nullopt;
}

std::optional<std::string> odd_grid_parity(const Doily& d) {
    const LineMask negative = valuation_of(d);
    const AbstractDoily& g = abstract_doily();
    for (int k = 0; k < kDoilyGrids; ++k) {
        const int n = std::popcount(static_cast<unsigned>(negative & g.grid_lines[static_cast<size_t>(k)]));
        if (n % 2 == 0) {
            return "grid " + std::to_string(k) + " has " + std::to_string(n) + " negative lines";
        }
    }
    return std::nullopt;
}

std::optional<std::string> linear_odd_negatives(const Doily& d) {
    if (!is_linear(d)) return std::nullopt;
    const int n = std::popcount(static_cast<unsigned>(valuation_of(d)));
    if (n % 2 == 0) {
        return "linear doily with " + std::to_string(n) + " negative lines";
    }
    return std::nullopt;
}

std::optional<std::string> quadric_class_valid(const Doily& d) {
    try {
        quadric_class(d);
    } catch (const InvariantViolation& e) {
        return std::string(e.what());
    }
    return std::nullopt;
}

std::optional<std::string> linear_not_perpial(const Doily& d) {
    if (is_linear(d) && quadric_class(d) == QuadricClass::perpial) {
        return "linear perpial doily";
    }
    return std::nullopt;
}

constexpr std::array<Property, 5> kDoilyLevel = {
    Property::gq_axiom, Property::real_line_phase, Property::ovoids_valid, Property::odd_grid_parity,
    Property::linear_odd_negatives,
};

}  // namespace

std::string_view to_string(Property p) {
    switch (p) {
        case Property::gq_axiom: return "gq_axiom";
        case Property::real_line_phase: return "real_line_phase";
        case Property::ovoids_valid: return "ovoids_valid";
        case Property::odd_grid_parity: return "odd_grid_parity";
        case Property::linear_odd_negatives: return "linear_odd_negatives";
        case Property::quadric_class_valid: return "quadric_class_valid";
        case Property::linear_not_perpial: return "linear_not_perpial";
    }
    return "?";
}

std::optional<std::string> check(Property p, const Doily& d) {
    switch (p) {
        case Property::gq_axiom: return gq_axiom(d);
        case Property::real_line_phase: return real_line_phase(d);
        case Property::ovoids_valid: return ovoids_valid(d);
        case Property::odd_grid_parity: return odd_grid_parity(d);
        case Property::linear_odd_negatives: return linear_odd_negatives(d);
        case Property::quadric_class_valid: return quadric_class_valid(d);
        case Property::linear_not_perpial: return linear_not_perpial(d);
    }
    return "unknown property";
}

void PropertyTally::run(Property p, const Doily& d) {
    const auto i = static_cast<size_t>(p);
    ++checked_[i];
    std::optional<std::string> why;
    try {
        why = check(p, d);
    } catch (const std::exception& e) {
        why = std::string("exception: ") + e.what();
    }
    if (why) {
        ++violations_[i];
        if (!first_failure_[i]) {
            first_failure_[i] = d.str() + ": " + *why;
        }
    }
}

void PropertyTally::check_all(const Doily& d) {
    for (Property p : kDoilyLevel) {
        run(p, d);
    }
    if (d.qubits() == 5) {
        check_five_qubit(d);
    }
}

void PropertyTally::check_five_qubit(const Doily& d) {
    run(Property::quadric_class_valid, d);
    run(Property::linear_not_perpial, d);
}

void PropertyTally::merge(const PropertyTally& other) {
    for (size_t i = 0; i < kProperties; ++i) {
        checked_[i] += other.checked_[i];
        violations_[i] += other.violations_[i];
        if (!first_failure_[i] && other.first_failure_[i]) {
            first_failure_[i] = other.first_failure_[i];
        }
    }
}

std::uint64_t PropertyTally::total_violations() const {
    std::uint64_t t = 0;
    for (auto v : violations_) t += v;
    return t;
}

std::vector<std::string> parity_link_violations(const TypeTable& table) {
    std::vector<std::string> out;
    if (table.qubits != 5) return out;
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const TypeRow& row = table.rows[r];
        const int bc = row.signature.counts[1] + row.signature.counts[2];
        for (int c = 0; c < kNegLineConfigs; ++c) {
            const auto config = static_cast<NegLineConfig>(c);
            if (row.histogram[static_cast<size_t>(c)] != 0 && (negative_line_count(config) - bc) % 2 != 0) {
                out.push_back("row " + std::to_string(r + 1) + " (" + row.signature.str() + ") has B+C=" +
                              std::to_string(bc) + " with " + std::string(to_string(config)) + " negative lines");
            }
        }
    }
    return out;
}

}  // namespace doily
