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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "doily/doily.h"

namespace doily {

/// Configurations of negative lines, in table column order.
enum class NegLineConfig : std::uint8_t {
    k3, k4, k5, k6, k7A, k7B, k8A, k8B, k9, k10, k11, k12,
};
inline constexpr int kNegLineConfigs = 12;

std::string_view to_string(NegLineConfig c);
/// Accepts "3", "7A", ... ; empty for anything else.
std::optional<NegLineConfig> parse_neg_line_config(std::string_view tag);
int negative_line_count(NegLineConfig c);
/// 3<->12, 4<->11, 5<->10, 6<->9, 7A<->8A, 7B<->8B.
NegLineConfig complement(NegLineConfig c);

/// Points covered by the negative lines of the A and B variants with seven
/// and eight negative lines. Derived from the reference patterns below.
inline constexpr int kCoverage7A = 15;
inline constexpr int kCoverage7B = 13;
inline constexpr int kCoverage8A = 15;
inline constexpr int kCoverage8B = 13;

/// Number of abstract points lying on at least one line of the mask.
int line_coverage(LineMask lines);

/// Configuration of a valuation, from its weight and point coverage.
/// Throws InvariantViolation if no configuration matches.
NegLineConfig config_of_valuation(LineMask negative_lines);

/// Canonical drawing of each configuration on the abstract doily.
LineMask reference_pattern(NegLineConfig c);

enum class LineSign { positive, negative };
enum class Character { linear, quadratic };
enum class QuadricClass { ovoidal, perpial, gridal, special };

std::string_view to_string(Character c);
std::string_view to_string(QuadricClass q);

/// Observable counts by number of non-identity letters: entry t counts the
/// points with t + 1 non-identity letters (entry 0 is type A).
struct Signature {
    std::vector<int> counts;

    friend bool operator==(const Signature&, const Signature&) = default;
    /// "1-5-9" style rendering.
    std::string str() const;
};

Signature signature_of(const Doily& d);

/// Sign of the product of the line's three observables.
LineSign line_sign(const Doily& d, int abstract_line);

/// Bit per abstract line, set for negative lines.
LineMask valuation_of(const Doily& d);

NegLineConfig neg_config(const Doily& d);

bool is_linear(const Doily& d);

/// Intersection class with the quadric of five-qubit observables carrying an
/// even number of non-identity letters. Five qubits only.
QuadricClass quadric_class(const Doily& d);

/// True iff the observable has an even, nonzero number of non-identity letters.
bool on_distinguished_quadric(Word w);

struct Classification {
    Signature signature;
    Character character = Character::linear;
    NegLineConfig config = NegLineConfig::k3;
    LineMask valuation = 0;
    std::optional<QuadricClass> quadric;
};

Classification classify(const Doily& d);

/// The six linear doilies through the ovoids of a quadratic doily.
/// Throws std::invalid_argument for a linear doily.
std::array<Doily, kDoilyOvoids> hexad(const Doily& d);

}  // namespace doily
