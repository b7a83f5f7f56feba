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

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace doily {

/// Packed N-qubit Pauli word, two bits per qubit.
///
/// Qubit 1 (the leftmost letter) occupies the most significant pair. Within a
/// pair the high bit is the "x" coordinate and the low bit the "z" coordinate,
/// with I=00, X=01, Z=10, Y=11. Unsigned comparison of two words of the same
/// length is therefore the letter order I < X < Z < Y, leftmost letter first.
using Word = std::uint64_t;

inline constexpr int kMaxQubits = 32;

/// Raised when a structural invariant that should hold by construction is
/// found broken at runtime (as opposed to bad user input).
class InvariantViolation : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

namespace word {

inline constexpr Word kLowLanes = 0x5555555555555555ULL;

constexpr Word lane_mask(int qubits) {
    return qubits >= kMaxQubits ? ~Word{0} : (Word{1} << (2 * qubits)) - 1;
}

/// Exchanges the x and z bit of every qubit.
constexpr Word swap_lanes(Word w) {
    return ((w >> 1) & kLowLanes) | ((w & kLowLanes) << 1);
}

/// Symplectic form: sum over qubits of x_a z_b + z_a x_b, mod 2.
constexpr int symplectic(Word a, Word b) {
    return std::popcount(a & swap_lanes(b)) & 1;
}

constexpr bool commute(Word a, Word b) { return symplectic(a, b) == 0; }

/// Exponent k (mod 4) such that a.b = i^k (a XOR b) as Hermitian Pauli words.
constexpr int product_phase(Word a, Word b) {
    const Word ax = (a >> 1) & kLowLanes;
    const Word az = a & kLowLanes;
    const Word bx = (b >> 1) & kLowLanes;
    const Word bz = b & kLowLanes;
    const Word a_x = ~ax & az;  // letter X
    const Word a_y = ax & az;   // letter Y
    const Word a_z = ax & ~az;  // letter Z
    const Word b_x = ~bx & bz;
    const Word b_y = bx & bz;
    const Word b_z = bx & ~bz;
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders pick up -i.
    const Word plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
    const Word minus = (a_y & b_x) | (a_z & b_y) | (a_x & b_z);
    return (std::popcount(plus) - std::popcount(minus)) & 3;
}

constexpr int non_identity_count(Word w) {
    return std::popcount((w | (w >> 1)) & kLowLanes);
}

}  // namespace word

/// A non-identity N-qubit Pauli observable, i.e. a point of W(2N-1, 2).
class Observable {
   public:
    /// Parses a word over {I, X, Y, Z}; the leftmost letter is qubit 1.
    static Observable parse(std::string_view letters);
    /// Throws std::invalid_argument for the zero word or stray high bits.
    static Observable from_word(Word w, int qubits);

    int qubits() const { return qubits_; }
    Word word() const { return word_; }
    /// x coordinate of each qubit, qubit 1 most significant.
    std::uint32_t x_bits() const;
    /// z coordinate of each qubit, qubit 1 most significant.
    std::uint32_t z_bits() const;
    char letter(int qubit) const;
    int identity_weight() const { return qubits_ - word::non_identity_count(word_); }
    std::string str() const;

    friend bool operator==(const Observable&, const Observable&) = default;

   private:
    Observable(Word w, int qubits) : word_(w), qubits_(qubits) {}

    Word word_ = 0;
    int qubits_ = 0;
};

/// Total order on observables of equal length; throws on mismatched lengths.
std::strong_ordering compare(const Observable& a, const Observable& b);

inline std::strong_ordering operator<=>(const Observable& a, const Observable& b) {
    return compare(a, b);
}

/// i^phase_exp times a Pauli word that may be the identity.
struct PhasedProduct {
    int phase_exp = 0;
    Word word = 0;
    int qubits = 0;

    bool is_identity() const { return word == 0; }
    std::optional<Observable> observable() const;
    /// "+XYZ", "-iII" and so on.
    std::string str() const;

    friend bool operator==(const PhasedProduct&, const PhasedProduct&) = default;
};

int symplectic(const Observable& a, const Observable& b);
inline bool commute(const Observable& a, const Observable& b) { return symplectic(a, b) == 0; }

PhasedProduct multiply(const Observable& a, const Observable& b);
PhasedProduct multiply(const PhasedProduct& a, const Observable& b);

/// |a.b| for commuting, distinct a and b.
Observable abs_product(const Observable& a, const Observable& b);

/// Renders a raw word; the zero word renders as all I.
std::string word_to_string(Word w, int qubits);

}  // namespace doily
