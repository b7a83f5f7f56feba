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

#include "doily/doily.h"

#include <algorithm>
#include <stdexcept>

namespace doily {

std::optional<std::string> ovoid_violation(std::span<const Word> words) {
    if (words.size() != 5) {
        return "an ovoid has five points";
    }
    Word total = 0;
    for (size_t i = 0; i < words.size(); ++i) {
        if (words[i] == 0) {
            return "the identity is not a point";
        }
        total ^= words[i];
        for (size_t j = i + 1; j < words.size(); ++j) {
            if (words[i] == words[j]) {
                return "repeated point";
            }
            if (word::commute(words[i], words[j])) {
                return "two ovoid points commute";
            }
        }
    }
    if (total != 0) {
        return "the product of the five points is not the identity word";
    }
    return std::nullopt;
}

Ovoid Ovoid::make(std::array<Word, 5> words, int qubits) {
    for (Word w : words) {
        (void)Observable::from_word(w, qubits);
    }
    if (auto why = ovoid_violation(words)) {
        throw std::invalid_argument("not an ovoid: " + *why);
    }
    std::sort(words.begin(), words.end());
    return Ovoid(words, qubits);
}

Ovoid Ovoid::make(std::span<const Observable> points) {
    if (points.size() != 5) {
        throw std::invalid_argument("an ovoid has five points");
    }
    std::array<Word, 5> words{};
    for (size_t i = 0; i < 5; ++i) {
        if (points[i].qubits() != points[0].qubits()) {
            throw std::invalid_argument("ovoid points have different qubit counts");
        }
        words[i] = points[i].word();
    }
    return make(words, points[0].qubits());
}

std::string Ovoid::str() const {
    std::string s;
    for (Word w : words_) {
        if (!s.empty()) {
            s += ' ';
        }
        s += word_to_string(w, qubits_);
    }
    return s;
}

DoilyRoot DoilyRoot::make(const Ovoid& ovoid, const Observable& center) {
    if (center.qubits() != ovoid.qubits()) {
        throw std::invalid_argument("center and ovoid have different qubit counts");
    }
    const auto& o = ovoid.words();
    const Word c = center.word();
    if (!word::commute(c, o[0]) || !word::commute(c, o[1]) || !word::commute(c, o[2]) ||
        word::commute(c, o[3]) || word::commute(c, o[4])) {
        throw std::invalid_argument(center.str() +
                                    " does not commute with exactly the three smallest points of " +
                                    ovoid.str());
    }
    return DoilyRoot{ovoid, center};
}

std::array<Word, kDoilyPoints> Doily::sorted_words() const {
    auto s = labels_;
    std::sort(s.begin(), s.end());
    return s;
}

std::string Doily::str() const {
    std::string s;
    for (Word w : sorted_words()) {
        if (!s.empty()) {
            s += ' ';
        }
        s += word_to_string(w, qubits_);
    }
    return s;
}

bool same_doily(const Doily& a, const Doily& b) {
    return a.qubits() == b.qubits() && a.sorted_words() == b.sorted_words();
}

std::optional<std::string> doily_violation(const Doily& d) {
    const AbstractDoily& g = abstract_doily();
    const auto sorted = d.sorted_words();
    if (sorted[0] == 0) {
        return "identity word in labeling";
    }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return "labeling is not injective";
    }
    for (const auto& line : g.lines) {
        const Word a = d.word(line[0]), b = d.word(line[1]), c = d.word(line[2]);
        if ((a ^ b ^ c) != 0) {
            return "line " + word_to_string(a, d.qubits()) + " " + word_to_string(b, d.qubits()) + " " +
                   word_to_string(c, d.qubits()) + " is not closed under product";
        }
    }
    for (int p = 0; p < kDoilyPoints; ++p) {
        for (int q = p + 1; q < kDoilyPoints; ++q) {
            const bool collinear = (g.collinear_with[p] >> q) & 1;
            if (word::commute(d.word(p), d.word(q)) != collinear) {
                return word_to_string(d.word(p), d.qubits()) + " and " + word_to_string(d.word(q), d.qubits()) +
                       (collinear ? " are collinear but anticommute" : " are not collinear but commute");
            }
        }
    }
    return std::nullopt;
}

Doily complete_doily_unchecked(const std::array<Word, 5>& ovoid, Word center, int qubits) {
    const AbstractDoily& g = abstract_doily();
    std::array<Word, kDoilyPoints> f{};
    for (size_t i = 0; i < 5; ++i) {
        f[static_cast<size_t>(g.reference_ovoid[i])] = ovoid[i];
    }
    f[static_cast<size_t>(g.reference_center)] = center;
    for (const CompletionStep& s : g.completion) {
        f[static_cast<size_t>(s.result)] = f[static_cast<size_t>(s.first)] ^ f[static_cast<size_t>(s.second)];
    }
    return Doily(qubits, f);
}

Doily complete_doily(const DoilyRoot& root) {
    const Doily d = complete_doily_unchecked(root.ovoid.words(), root.center.word(), root.ovoid.qubits());
    if (auto why = doily_violation(d)) {
        throw InvariantViolation("completion of root (" + root.ovoid.str() + "; " + root.center.str() +
                                 ") is not a doily: " + *why);
    }
    return d;
}

std::array<Ovoid, kDoilyOvoids> ovoids_of(const Doily& d) {
    const AbstractDoily& g = abstract_doily();
    std::array<Ovoid, kDoilyOvoids> out;
    for (int o = 0; o < kDoilyOvoids; ++o) {
        std::array<Word, 5> w{};
        for (size_t i = 0; i < 5; ++i) {
            w[i] = d.word(g.ovoids[o][i]);
        }
        std::sort(w.begin(), w.end());
        out[static_cast<size_t>(o)] = Ovoid::trusted(w, d.qubits());
    }
    return out;
}

bool is_canonical(const Doily& d, const Ovoid& generating_ovoid) {
    const auto ovoids = ovoids_of(d);
    if (std::find(ovoids.begin(), ovoids.end(), generating_ovoid) == ovoids.end()) {
        throw std::invalid_argument(generating_ovoid.str() + " is not an ovoid of the doily");
    }
    return generating_ovoid == *std::min_element(ovoids.begin(), ovoids.end());
}

Doily linear_doily_from_ovoid(const Ovoid& ovoid) {
    const AbstractDoily& g = abstract_doily();
    const auto& o = ovoid.words();
    std::array<Word, kDoilyPoints> f{};
    for (int p = 0; p < kDoilyPoints; ++p) {
        const auto [i, j] = g.duads[static_cast<size_t>(p)];
        f[static_cast<size_t>(p)] = j == 6 ? o[static_cast<size_t>(i - 1)]
                                           : o[static_cast<size_t>(i - 1)] ^ o[static_cast<size_t>(j - 1)];
    }
    Doily d(ovoid.qubits(), f);
    if (auto why = doily_violation(d)) {
        throw InvariantViolation("linear doily of ovoid " + ovoid.str() + " is invalid: " + *why);
    }
    return d;
}

Doily doily_from_points(std::span<const Observable> points) {
    if (points.size() != kDoilyPoints) {
        throw std::invalid_argument("a doily has 15 points, got " + std::to_string(points.size()));
    }
    const int n = points[0].qubits();
    std::array<Word, kDoilyPoints> w{};
    for (size_t i = 0; i < points.size(); ++i) {
        if (points[i].qubits() != n) {
            throw std::invalid_argument("doily points have different qubit counts");
        }
        w[i] = points[i].word();
    }
    std::sort(w.begin(), w.end());
    if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
        throw std::invalid_argument("repeated point");
    }

    // Smallest ovoid among the points, found by lexicographic 5-subset search.
    std::optional<std::array<Word, 5>> ovoid;
    for (size_t a = 0; a < 15 && !ovoid; ++a)
        for (size_t b = a + 1; b < 15 && !ovoid; ++b) {
            if (word::commute(w[a], w[b])) continue;
            for (size_t c = b + 1; c < 15 && !ovoid; ++c) {
                if (word::commute(w[a], w[c]) || word::commute(w[b], w[c])) continue;
                for (size_t e = c + 1; e < 15 && !ovoid; ++e) {
                    const Word fifth = w[a] ^ w[b] ^ w[c] ^ w[e];
                    if (fifth <= w[e] || !std::binary_search(w.begin(), w.end(), fifth)) continue;
                    std::array<Word, 5> cand{w[a], w[b], w[c], w[e], fifth};
                    if (!ovoid_violation(cand)) {
                        ovoid = cand;
                    }
                }
            }
        }
    if (!ovoid) {
        throw std::invalid_argument("the points contain no ovoid");
    }
    const auto& o = *ovoid;
    for (Word c : w) {
        if (word::commute(c, o[0]) && word::commute(c, o[1]) && word::commute(c, o[2]) &&
            !word::commute(c, o[3]) && !word::commute(c, o[4])) {
            Doily d = complete_doily_unchecked(o, c, n);
            if (d.sorted_words() == w && !doily_violation(d)) {
                return d;
            }
        }
    }
    throw std::invalid_argument("the points do not form a doily");
}

}  // namespace doily
