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

#include "doily/pauli.h"

namespace doily {

namespace {

constexpr char kLetters[4] = {'I', 'X', 'Z', 'Y'};

void require_same_length(const Observable& a, const Observable& b) {
    if (a.qubits() != b.qubits()) {
        throw std::invalid_argument(
            "observables have different qubit counts: " + a.str() + " vs " + b.str());
    }
}

}  // namespace

Observable Observable::parse(std::string_view letters) {
    if (letters.empty()) {
        throw std::invalid_argument("empty Pauli word");
    }
    if (letters.size() > static_cast<size_t>(kMaxQubits)) {
        throw std::invalid_argument("Pauli word longer than " + std::to_string(kMaxQubits) + " qubits");
    }
    Word w = 0;
    for (char c : letters) {
        Word pair;
        switch (c) {
            case 'I': pair = 0b00; break;
            case 'X': pair = 0b01; break;
            case 'Z': pair = 0b10; break;
            case 'Y': pair = 0b11; break;
            default:
                throw std::invalid_argument("invalid Pauli letter '" + std::string(1, c) + "' in " +
                                            std::string(letters));
        }
        w = (w << 2) | pair;
    }
    if (w == 0) {
        throw std::invalid_argument("the identity word " + std::string(letters) + " is not a point");
    }
    return Observable(w, static_cast<int>(letters.size()));
}

Observable Observable::from_word(Word w, int qubits) {
    if (qubits < 1 || qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range: " + std::to_string(qubits));
    }
    if (w == 0) {
        throw std::invalid_argument("the identity word is not a point");
    }
    if ((w & ~word::lane_mask(qubits)) != 0) {
        throw std::invalid_argument("word has bits beyond qubit " + std::to_string(qubits));
    }
    return Observable(w, qubits);
}

std::uint32_t Observable::x_bits() const {
    std::uint32_t r = 0;
    for (int q = 0; q < qubits_; ++q) {
        r = (r << 1) | static_cast<std::uint32_t>((word_ >> (2 * (qubits_ - 1 - q) + 1)) & 1);
    }
    return r;
}

std::uint32_t Observable::z_bits() const {
    std::uint32_t r = 0;
    for (int q = 0; q < qubits_; ++q) {
        r = (r << 1) | static_cast<std::uint32_t>((word_ >> (2 * (qubits_ - 1 - q))) & 1);
    }
    return r;
}

char Observable::letter(int qubit) const {
    if (qubit < 0 || qubit >= qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    return kLetters[(word_ >> (2 * (qubits_ - 1 - qubit))) & 3];
}

std::string Observable::str() const { return word_to_string(word_, qubits_); }

std::string word_to_string(Word w, int qubits) {
    std::string s(static_cast<size_t>(qubits), 'I');
    for (int q = 0; q < qubits; ++q) {
        s[static_cast<size_t>(q)] = kLetters[(w >> (2 * (qubits - 1 - q))) & 3];
    }
    return s;
}

std::strong_ordering compare(const Observable& a, const Observable& b) {
    require_same_length(a, b);
    return a.word() <=> b.word();
}

std::optional<Observable> PhasedProduct::observable() const {
    if (word == 0) {
        return std::nullopt;
    }
    return Observable::from_word(word, qubits);
}

std::string PhasedProduct::str() const {
    static constexpr const char* kPrefix[4] = {"+", "+i", "-", "-i"};
    return kPrefix[phase_exp & 3] + word_to_string(word, qubits);
}

int symplectic(const Observable& a, const Observable& b) {
    require_same_length(a, b);
    return word::symplectic(a.word(), b.word());
}

PhasedProduct multiply(const Observable& a, const Observable& b) {
    require_same_length(a, b);
    return PhasedProduct{word::product_phase(a.word(), b.word()), a.word() ^ b.word(), a.qubits()};
}

PhasedProduct multiply(const PhasedProduct& a, const Observable& b) {
    if (a.qubits != b.qubits()) {
        throw std::invalid_argument("operands have different qubit counts");
    }
    return PhasedProduct{(a.phase_exp + word::product_phase(a.word, b.word())) & 3, a.word ^ b.word(),
                         a.qubits};
}

Observable abs_product(const Observable& a, const Observable& b) {
    require_same_length(a, b);
    if (!commute(a, b)) {
        throw std::invalid_argument(a.str() + " and " + b.str() +
                                    " anticommute; their product has an imaginary phase");
    }
    if (a == b) {
        throw std::invalid_argument("product of " + a.str() + " with itself is the identity");
    }
    return Observable::from_word(a.word() ^ b.word(), a.qubits());
}

}  // namespace doily
