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

#include "doily/type_table.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace doily {

namespace {

// Cell key: 4 bits per signature entry, character in bit 60.
constexpr int kCharacterBit = 60;

std::uint64_t pack_key(const Signature& s, Character c) {
    std::uint64_t key = 0;
    for (size_t t = 0; t < s.counts.size(); ++t) {
        key |= static_cast<std::uint64_t>(s.counts[t]) << (4 * t);
    }
    if (c == Character::quadratic) {
        key |= std::uint64_t{1} << kCharacterBit;
    }
    return key;
}

TypeRow unpack_key(std::uint64_t key, int qubits) {
    TypeRow row;
    row.signature.counts.resize(static_cast<size_t>(qubits));
    for (int t = 0; t < qubits; ++t) {
        row.signature.counts[static_cast<size_t>(t)] = static_cast<int>(key >> (4 * t) & 0xF);
    }
    row.character = (key >> kCharacterBit & 1) ? Character::quadratic : Character::linear;
    return row;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        cells.emplace_back();
    }
    return cells;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
    std::uint64_t v = 0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("bad " + what + ": '" + text + "'");
    }
    return v;
}

std::vector<std::string> expected_header(int qubits) {
    std::vector<std::string> h{"type_index"};
    for (int t = 0; t < qubits; ++t) {
        h.push_back(signature_column(t));
    }
    h.emplace_back("nu");
    for (int c = 0; c < kNegLineConfigs; ++c) {
        h.emplace_back(to_string(static_cast<NegLineConfig>(c)));
    }
    return h;
}

std::string describe(const TypeRow& r) {
    std::string s = r.signature.str() + " " + std::string(to_string(r.character)) + " [";
    bool first = true;
    for (int c = 0; c < kNegLineConfigs; ++c) {
        if (r.histogram[static_cast<size_t>(c)] == 0) {
            continue;
        }
        if (!first) s += ' ';
        first = false;
        s += std::to_string(r.histogram[static_cast<size_t>(c)]) + "@" +
             std::string(to_string(static_cast<NegLineConfig>(c)));
    }
    return s + "]";
}

}  // namespace

std::uint64_t TypeRow::total() const {
    std::uint64_t t = 0;
    for (auto v : histogram) t += v;
    return t;
}

std::uint64_t TypeTable::total() const {
    std::uint64_t t = 0;
    for (const auto& r : rows) t += r.total();
    return t;
}

std::uint64_t TypeTable::total(Character c) const {
    std::uint64_t t = 0;
    for (const auto& r : rows) {
        if (r.character == c) t += r.total();
    }
    return t;
}

std::size_t TypeTable::row_count(Character c) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [c](const TypeRow& r) { return r.character == c; }));
}

bool row_precedes(const TypeRow& a, const TypeRow& b) {
    const auto& x = a.signature.counts;
    const auto& y = b.signature.counts;
    if (!std::equal(x.rbegin(), x.rend(), y.rbegin(), y.rend())) {
        return std::lexicographical_compare(y.rbegin(), y.rend(), x.rbegin(), x.rend());
    }
    return a.character == Character::quadratic && b.character == Character::linear;
}

TypeTableBuilder::TypeTableBuilder(int qubits) : qubits_(qubits) {
    if (qubits < 2 || qubits > 15) {
        throw std::invalid_argument("type tables support 2 to 15 qubits");
    }
}

void TypeTableBuilder::bump(std::uint64_t key, NegLineConfig config) {
    if (key != last_key_) {
        last_cell_ = &cells_[key];
        last_key_ = key;
    }
    ++(*last_cell_)[static_cast<size_t>(config)];
    ++doilies_;
}

void TypeTableBuilder::add(const Classification& c) {
    if (c.signature.counts.size() != static_cast<size_t>(qubits_)) {
        throw std::invalid_argument("signature length does not match the table");
    }
    bump(pack_key(c.signature, c.character), c.config);
}

void TypeTableBuilder::add(const Doily& d) { add(d, is_linear(d), valuation_of(d)); }

void TypeTableBuilder::add(const Doily& d, bool linear, LineMask valuation) {
    if (d.qubits() != qubits_) {
        throw std::invalid_argument("doily qubit count does not match the table");
    }
    std::uint64_t key = 0;
    for (Word w : d.labels()) {
        key += std::uint64_t{1} << (4 * (word::non_identity_count(w) - 1));
    }
    if (!linear) {
        key |= std::uint64_t{1} << kCharacterBit;
    }
    bump(key, config_of_valuation(valuation));
}

void TypeTableBuilder::merge(const TypeTableBuilder& other) {
    if (other.qubits_ != qubits_) {
        throw std::invalid_argument("cannot merge tables of different qubit counts");
    }
    for (const auto& [key, hist] : other.cells_) {
        auto& mine = cells_[key];
        for (size_t i = 0; i < hist.size(); ++i) {
            mine[i] += hist[i];
        }
    }
    doilies_ += other.doilies_;
    // Rehashing may have moved the cached cell.
    last_key_ = ~std::uint64_t{0};
    last_cell_ = nullptr;
}

TypeTable TypeTableBuilder::build() const {
    TypeTable table;
    table.qubits = qubits_;
    for (const auto& [key, hist] : cells_) {
        TypeRow row = unpack_key(key, qubits_);
        row.histogram = hist;
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(), row_precedes);
    return table;
}

std::string signature_column(int t) { return std::string(1, static_cast<char>('A' + t)); }

void write_csv(std::ostream& out, const TypeTable& table) {
    const auto header = expected_header(table.qubits);
    for (size_t i = 0; i < header.size(); ++i) {
        out << (i ? "," : "") << header[i];
    }
    out << '\n';
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const TypeRow& row = table.rows[r];
        out << r + 1;
        for (int v : row.signature.counts) {
            out << ',' << v;
        }
        out << ',' << to_string(row.character);
        for (auto v : row.histogram) {
            out << ',';
            if (v != 0) out << v;
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const TypeTable& table) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const TypeRow& row = table.rows[r];
        nlohmann::ordered_json j;
        j["type_index"] = r + 1;
        for (size_t t = 0; t < row.signature.counts.size(); ++t) {
            j[signature_column(static_cast<int>(t))] = row.signature.counts[t];
        }
        j["nu"] = std::string(to_string(row.character));
        for (int c = 0; c < kNegLineConfigs; ++c) {
            const auto v = row.histogram[static_cast<size_t>(c)];
            if (v != 0) {
                j[std::string(to_string(static_cast<NegLineConfig>(c)))] = v;
            }
        }
        rows.push_back(std::move(j));
    }
    nlohmann::ordered_json doc;
    doc["qubits"] = table.qubits;
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << '\n';
}

std::string to_csv(const TypeTable& table) {
    std::ostringstream ss;
    write_csv(ss, table);
    return ss.str();
}

std::string to_json(const TypeTable& table) {
    std::ostringstream ss;
    write_json(ss, table);
    return ss.str();
}

TypeTable read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::invalid_argument("empty CSV");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split_csv(line);
    const int qubits = static_cast<int>(header.size()) - 2 - kNegLineConfigs;
    if (qubits < 2 || header != expected_header(qubits)) {
        throw std::invalid_argument("unexpected CSV header: " + line);
    }
    TypeTable table;
    table.qubits = qubits;
    std::uint64_t expected_index = 1;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split_csv(line);
        if (cells.size() != header.size()) {
            throw std::invalid_argument("row has " + std::to_string(cells.size()) + " cells: " + line);
        }
        if (parse_u64(cells[0], "type_index") != expected_index++) {
            throw std::invalid_argument("type_index out of sequence: " + line);
        }
        TypeRow row;
        for (int t = 0; t < qubits; ++t) {
            row.signature.counts.push_back(
                static_cast<int>(parse_u64(cells[static_cast<size_t>(1 + t)], "signature entry")));
        }
        const std::string& nu = cells[static_cast<size_t>(1 + qubits)];
        if (nu == "l") {
            row.character = Character::linear;
        } else if (nu == "q") {
            row.character = Character::quadratic;
        } else {
            throw std::invalid_argument("bad nu: '" + nu + "'");
        }
        for (int c = 0; c < kNegLineConfigs; ++c) {
            const std::string& cell = cells[static_cast<size_t>(2 + qubits + c)];
            row.histogram[static_cast<size_t>(c)] = cell.empty() ? 0 : parse_u64(cell, "count");
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

TypeTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open " + path);
    }
    return read_csv(in);
}

std::vector<std::string> diff_tables(const TypeTable& expected, const TypeTable& actual) {
    std::vector<std::string> out;
    if (expected.qubits != actual.qubits) {
        out.push_back("qubit count: expected " + std::to_string(expected.qubits) + ", got " +
                      std::to_string(actual.qubits));
        return out;
    }
    const size_t n = std::max(expected.rows.size(), actual.rows.size());
    for (size_t i = 0; i < n; ++i) {
        const std::string tag = "row " + std::to_string(i + 1) + ": ";
        if (i >= expected.rows.size()) {
            out.push_back(tag + "unexpected " + describe(actual.rows[i]));
        } else if (i >= actual.rows.size()) {
            out.push_back(tag + "missing " + describe(expected.rows[i]));
        } else if (!(expected.rows[i] == actual.rows[i])) {
            out.push_back(tag + "expected " + describe(expected.rows[i]) + ", got " + describe(actual.rows[i]));
        }
    }
    return out;
}

}  // namespace doily
