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

#include "doily/classification.h"
#include "doily/type_table.h"

namespace doily {

enum class Property : std::uint8_t {
    gq_axiom,             // a point off a line commutes with exactly one of its points
    real_line_phase,      // every line multiplies to +I or -I
    ovoids_valid,         // all six ovoids anticommute pairwise and multiply to the identity word
    odd_grid_parity,      // every grid holds an odd number of negative lines
    linear_odd_negatives, // linear doilies have an odd number of negative lines
    quadric_class_valid,  // five qubits: the quadric meets the doily in a hyperplane
    linear_not_perpial,   // five qubits: no linear doily is perpial
};
inline constexpr int kProperties = 7;

std::string_view to_string(Property p);

/// Checks one property; returns the reason on failure.
std::optional<std::string> check(Property p, const Doily& d);

/// Per-property violation counters with the first failure of each kept for
/// reporting. One instance per worker; merge() combines them.
class PropertyTally {
   public:
    /// Runs the doily-level properties; the five-qubit ones only when
    /// d.qubits() == 5.
    void check_all(const Doily& d);
    /// Runs only the five-qubit checks.
    void check_five_qubit(const Doily& d);
    void merge(const PropertyTally& other);

    std::uint64_t checked(Property p) const { return checked_[static_cast<size_t>(p)]; }
    std::uint64_t violations(Property p) const { return violations_[static_cast<size_t>(p)]; }
    const std::optional<std::string>& first_failure(Property p) const {
        return first_failure_[static_cast<size_t>(p)];
    }
    std::uint64_t total_violations() const;

   private:
    void run(Property p, const Doily& d);

    std::array<std::uint64_t, kProperties> checked_{};
    std::array<std::uint64_t, kProperties> violations_{};
    std::array<std::optional<std::string>, kProperties> first_failure_{};
};

/// Five-qubit rows where the parity of B + C differs from the parity of a
/// negative-line count present in the row.
std::vector<std::string> parity_link_violations(const TypeTable& table);

}  // namespace doily
