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
#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "doily/geometry.h"
#include "doily/pauli.h"

namespace doily {

/// Five mutually anticommuting observables whose words XOR to zero, stored in
/// ascending order.
class Ovoid {
   public:
    Ovoid() = default;
    /// Validates and sorts; throws std::invalid_argument if not an ovoid.
    static Ovoid make(std::span<const Observable> points);
    static Ovoid make(std::array<Word, 5> words, int qubits);
    /// Skips validation; the caller guarantees the words are sorted and form an ovoid.
    static Ovoid trusted(const std::array<Word, 5>& sorted_words, int qubits) {
        return Ovoid(sorted_words, qubits);
    }

    int qubits() const { return qubits_; }
    const std::array<Word, 5>& words() const { return words_; }
    Observable point(int i) const { return Observable::from_word(words_.at(static_cast<size_t>(i)), qubits_); }
    std::string str() const;

    friend bool operator==(const Ovoid&, const Ovoid&) = default;
    /// Lexicographic order on the sorted 5-tuples.
    friend std::strong_ordering operator<=>(const Ovoid& a, const Ovoid& b) { return a.words_ <=> b.words_; }

   private:
    Ovoid(const std::array<Word, 5>& words, int qubits) : words_(words), qubits_(qubits) {}

    std::array<Word, 5> words_{};
    int qubits_ = 0;
};

/// Empty when the words form an ovoid, otherwise the reason they do not.
std::optional<std::string> ovoid_violation(std::span<const Word> words);

/// An ovoid together with a point commuting with its three smallest points and
/// anticommuting with the two largest.
struct DoilyRoot {
    Ovoid ovoid;
    Observable center;

    /// Throws std::invalid_argument when the center has the wrong commutation pattern.
    static DoilyRoot make(const Ovoid& ovoid, const Observable& center);
};

/// An N-qubit doily: an injective labeling of the abstract doily's points by
/// N-qubit observables. Two values denote the same doily when their point
/// sets coincide, see same_doily().
class Doily {
   public:
    Doily() = default;
    Doily(int qubits, const std::array<Word, kDoilyPoints>& labels) : labels_(labels), qubits_(qubits) {}

    int qubits() const { return qubits_; }
    const std::array<Word, kDoilyPoints>& labels() const { return labels_; }
    Word word(int abstract_point) const { return labels_[static_cast<size_t>(abstract_point)]; }
    Observable at(int abstract_point) const { return Observable::from_word(word(abstract_point), qubits_); }

    std::array<Word, kDoilyPoints> sorted_words() const;
    /// Sorted point strings joined by single spaces.
    std::string str() const;

   private:
    std::array<Word, kDoilyPoints> labels_{};
    int qubits_ = 0;
};

bool same_doily(const Doily& a, const Doily& b);

/// Checks the labeling is injective, maps lines to commuting triples closed
/// under product, and maps non-collinear pairs to anticommuting pairs.
std::optional<std::string> doily_violation(const Doily& d);

/// Fills in the labeling from a root; throws InvariantViolation when the
/// result is not a doily.
Doily complete_doily(const DoilyRoot& root);

/// Same completion without validation, for the enumeration hot loop.
Doily complete_doily_unchecked(const std::array<Word, 5>& ovoid, Word center, int qubits);

/// The six ovoids of a doily, each sorted, in the abstract ovoid order.
std::array<Ovoid, kDoilyOvoids> ovoids_of(const Doily& d);

/// True iff the generating ovoid is the smallest of the doily's six ovoids.
/// Throws std::invalid_argument if it is not one of them.
bool is_canonical(const Doily& d, const Ovoid& generating_ovoid);

/// The unique linear doily containing the ovoid, labeled through the
/// duad model: o_i sits on duad (i, 6) and |o_i.o_j| on duad (i, j).
Doily linear_doily_from_ovoid(const Ovoid& ovoid);

/// Reconstructs a labeling from 15 observables that form a doily.
/// Throws std::invalid_argument if they do not.
Doily doily_from_points(std::span<const Observable> points);

}  // namespace doily
