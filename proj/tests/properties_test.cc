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

#include "doctest.h"
#include "doily/properties.h"
#include "oracles.h"

using namespace doily;

TEST_SUITE("properties") {

TEST_CASE("three-qubit doilies satisfy every property") {
    PropertyTally tally;
    for (const Doily& d : oracle::three_qubit_doilies()) tally.check_all(d);
    for (int p = 0; p < kProperties; ++p) {
        const auto prop = static_cast<Property>(p);
        CAPTURE(to_string(prop));
        CHECK(tally.violations(prop) == 0);
    }
    CHECK(tally.checked(Property::gq_axiom) == 1344);
    CHECK(tally.checked(Property::quadric_class_valid) == 0);
}

TEST_CASE("violations are detected and reported") {
    // Swapping two labels across lines breaks the geometry.
    auto labels = abstract_doily().words;
    std::swap(labels[0], labels[14]);
    const Doily bad(2, labels);
    std::optional<std::string> any;
    for (int p = 0; p < 4; ++p) {
        if (!any) any = check(static_cast<Property>(p), bad);
    }
    CHECK(any.has_value());
    PropertyTally tally;
    tally.check_all(bad);
    CHECK(tally.total_violations() > 0);
    PropertyTally merged;
    merged.merge(tally);
    CHECK(merged.total_violations() == tally.total_violations());
}

TEST_CASE("five-qubit checks on a padded doily") {
    PropertyTally tally;
    tally.check_all(Doily(5, abstract_doily().words));
    CHECK(tally.checked(Property::quadric_class_valid) == 1);
    CHECK(tally.total_violations() == 0);
}

TEST_CASE("parity link on five-qubit rows") {
    TypeTable t;
    t.qubits = 5;
    TypeRow ok;
    ok.signature = Signature{{1, 2, 1, 6, 5}};  // B + C = 3
    ok.character = Character::quadratic;
    ok.histogram[static_cast<size_t>(NegLineConfig::k7A)] = 4;
    TypeRow bad = ok;
    bad.histogram[static_cast<size_t>(NegLineConfig::k4)] = 1;
    t.rows = {ok};
    CHECK(parity_link_violations(t).empty());
    t.rows = {bad};
    CHECK(parity_link_violations(t).size() == 1);
}

}  // TEST_SUITE
