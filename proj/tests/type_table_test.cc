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

#include <sstream>

#include "doctest.h"
#include "doily/type_table.h"
#include "json.hpp"
#include "oracles.h"

using namespace doily;

namespace {

const std::string kData = DOILY_DATA_DIR;

TypeTable three_qubit_table() {
    TypeTableBuilder b(3);
    for (const Doily& d : oracle::three_qubit_doilies()) b.add(d);
    return b.build();
}

}  // namespace

TEST_SUITE("type_table") {

TEST_CASE("golden files parse and are internally consistent") {
    const TypeTable a = read_csv_file(kData + "/appendix_a.csv");
    CHECK(a.qubits == 3);
    CHECK(a.rows.size() == 11);
    CHECK(a.row_count(Character::linear) == 5);
    CHECK(a.row_count(Character::quadratic) == 6);
    CHECK(a.total() == 1344);
    CHECK(a.total(Character::linear) == 336);
    CHECK(std::is_sorted(a.rows.begin(), a.rows.end(), row_precedes));
    CHECK(a.rows[0].signature == Signature{{1, 5, 9}});
    CHECK(a.rows[0].histogram[static_cast<size_t>(NegLineConfig::k6)] == 108);

    const TypeTable b = read_csv_file(kData + "/appendix_b.csv");
    CHECK(b.qubits == 4);
    CHECK(b.rows.size() == 95);
    CHECK(b.row_count(Character::linear) == 24);
    CHECK(b.row_count(Character::quadratic) == 71);
    CHECK(b.total() == 1462272);
    CHECK(b.total(Character::linear) == 91392);
    CHECK(std::is_sorted(b.rows.begin(), b.rows.end(), row_precedes));
}

TEST_CASE("three-qubit table equals the golden file") {
    const TypeTable got = three_qubit_table();
    const TypeTable want = read_csv_file(kData + "/appendix_a.csv");
    const auto diff = diff_tables(want, got);
    for (const auto& line : diff) MESSAGE(line);
    CHECK(diff.empty());
    CHECK(got == want);
}

TEST_CASE("fast and classified paths agree") {
    TypeTableBuilder fast(3), slow(3);
    for (const Doily& d : oracle::three_qubit_doilies()) {
        fast.add(d);
        slow.add(classify(d));
    }
    CHECK(fast.build() == slow.build());
}

TEST_CASE("merge is order independent") {
    const auto& all = oracle::three_qubit_doilies();
    TypeTableBuilder a(3), b(3), c(3);
    for (size_t i = 0; i < all.size(); ++i) (i % 3 == 0 ? a : i % 3 == 1 ? b : c).add(all[i]);
    TypeTableBuilder ab = a;
    ab.merge(b);
    ab.merge(c);
    TypeTableBuilder cb = c;
    cb.merge(b);
    cb.merge(a);
    CHECK(ab.build() == cb.build());
    CHECK(ab.doilies() == all.size());
    CHECK_THROWS_AS(a.merge(TypeTableBuilder(4)), std::invalid_argument);
}

TEST_CASE("CSV round trip and blank cells") {
    const TypeTable t = three_qubit_table();
    const std::string csv = to_csv(t);
    CHECK(csv.rfind("type_index,A,B,C,nu,3,4,5,6,7A,7B,8A,8B,9,10,11,12\n", 0) == 0);
    CHECK(csv.find("\n1,1,5,9,q,,,,108,,,,,,,,\n") != std::string::npos);
    std::istringstream in(csv);
    CHECK(read_csv(in) == t);
}

TEST_CASE("JSON mirrors CSV") {
    const TypeTable t = three_qubit_table();
    const auto j = nlohmann::json::parse(to_json(t));
    CHECK(j["qubits"] == 3);
    REQUIRE(j["rows"].size() == t.rows.size());
    CHECK(j["rows"][0]["type_index"] == 1);
    CHECK(j["rows"][0]["A"] == 1);
    CHECK(j["rows"][0]["nu"] == "q");
    CHECK(j["rows"][0]["6"] == 108);
    CHECK_FALSE(j["rows"][0].contains("3"));
}

TEST_CASE("malformed CSV is rejected") {
    std::istringstream bad_header("type_index,A,B,nu\n");
    CHECK_THROWS_AS(read_csv(bad_header), std::invalid_argument);
    std::istringstream bad_nu("type_index,A,B,nu,3,4,5,6,7A,7B,8A,8B,9,10,11,12\n1,6,9,x,1,,,,,,,,,,,\n");
    CHECK_THROWS_AS(read_csv(bad_nu), std::invalid_argument);
    std::istringstream bad_index("type_index,A,B,nu,3,4,5,6,7A,7B,8A,8B,9,10,11,12\n2,6,9,l,1,,,,,,,,,,,\n");
    CHECK_THROWS_AS(read_csv(bad_index), std::invalid_argument);
}

TEST_CASE("row-level diff") {
    TypeTable want = read_csv_file(kData + "/appendix_a.csv");
    TypeTable got = want;
    got.rows[3].histogram[1] += 1;
    got.rows.pop_back();
    const auto diff = diff_tables(want, got);
    REQUIRE(diff.size() == 2);
    CHECK(diff[0].rfind("row 4:", 0) == 0);
    CHECK(diff[1].rfind("row 11: missing", 0) == 0);
}

TEST_CASE("two-qubit table") {
    TypeTableBuilder b(2);
    b.add(Doily(2, abstract_doily().words));
    CHECK(to_csv(b.build()) == "type_index,A,B,nu,3,4,5,6,7A,7B,8A,8B,9,10,11,12\n1,6,9,l,1,,,,,,,,,,,\n");
}

}  // TEST_SUITE
