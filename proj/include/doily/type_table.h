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
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "doily/classification.h"

namespace doily {

using ConfigHistogram = std::array<std::uint64_t, kNegLineConfigs>;

struct TypeRow {
    Signature signature;
    Character character = Character::linear;
    ConfigHistogram histogram{};

    std::uint64_t total() const;
    friend bool operator==(const TypeRow&, const TypeRow&) = default;
};

/// Rows ordered by decreasing last signature entry, then decreasing previous
/// entries; quadratic before linear on equal signatures.
struct TypeTable {
    int qubits = 0;
    std::vector<TypeRow> rows;

    std::uint64_t total() const;
    std::uint64_t total(Character c) const;
    std::size_t row_count(Character c) const;
    friend bool operator==(const TypeTable&, const TypeTable&) = default;
};

/// Row order predicate used by TypeTable.
bool row_precedes(const TypeRow& a, const TypeRow& b);

/// Accumulates doilies into (signature, character) cells. One builder per
/// worker; merge() is associative and commutative.
class TypeTableBuilder {
   public:
    explicit TypeTableBuilder(int qubits);

    void add(const Classification& c);
    /// Classifies and adds in one pass.
    void add(const Doily& d);
    /// Same, reusing a linearity verdict and valuation computed by the caller.
    void add(const Doily& d, bool linear, LineMask valuation);
    void merge(const TypeTableBuilder& other);

    int qubits() const { return qubits_; }
    std::uint64_t doilies() const { return doilies_; }
    TypeTable build() const;

   private:
    void bump(std::uint64_t key, NegLineConfig config);

    int qubits_;
    std::uint64_t doilies_ = 0;
    std::unordered_map<std::uint64_t, ConfigHistogram> cells_;
    std::uint64_t last_key_ = ~std::uint64_t{0};
    ConfigHistogram* last_cell_ = nullptr;
};

/// Signature column name for entry t: "A", "B", ...
std::string signature_column(int t);

void write_csv(std::ostream& out, const TypeTable& table);
void write_json(std::ostream& out, const TypeTable& table);
std::string to_csv(const TypeTable& table);
std::string to_json(const TypeTable& table);

/// Parses the CSV layout produced by write_csv. Throws std::invalid_argument
/// on malformed input.
TypeTable read_csv(std::istream& in);
TypeTable read_csv_file(const std::string& path);

/// Human-readable row-level differences; empty when the tables are equal.
std::vector<std::string> diff_tables(const TypeTable& expected, const TypeTable& actual);

}  // namespace doily
