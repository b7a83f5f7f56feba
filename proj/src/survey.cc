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

#include "doily/survey.h"

#include <array>
#include <memory>
#include <vector>

#include "doily/contextuality.h"

namespace doily {

namespace {

class SurveyWorker final : public DoilyVisitor {
   public:
    explicit SurveyWorker(const SurveyOptions& options) : options_(options), table(options.qubits) {
        degree_cache.fill(-1);
    }

    void visit(const Doily& d, const Ovoid&) override {
        const bool linear = is_linear(d);
        const LineMask valuation = valuation_of(d);
        table.add(d, linear, valuation);
        if (options_.properties) {
            tally.check_all(d);
        } else if (options_.quadric_checks && d.qubits() == 5) {
            tally.check_five_qubit(d);
        }
        if (options_.contextuality) {
            // Only 2^15 valuations exist, so each is solved once per worker.
            auto& cached = degree_cache[valuation];
            if (cached < 0) {
                cached = static_cast<std::int8_t>(degree(doily_incidence(valuation)));
            }
            if (cached != 3) {
                ++degree_violations;
                if (!first_degree_violation) first_degree_violation = d.str();
            }
        }
    }

    const SurveyOptions& options_;
    TypeTableBuilder table;
    PropertyTally tally;
    std::uint64_t degree_violations = 0;
    std::optional<std::string> first_degree_violation;
    std::array<std::int8_t, 1u << kDoilyLines> degree_cache{};
};

}  // namespace

SurveyResult survey(const SurveyOptions& options) {
    const unsigned n = resolve_threads(options.threads);
    std::vector<std::unique_ptr<SurveyWorker>> workers;
    std::vector<DoilyVisitor*> ptrs;
    for (unsigned i = 0; i < n; ++i) {
        workers.push_back(std::make_unique<SurveyWorker>(options));
        ptrs.push_back(workers.back().get());
    }
    EnumerationOptions eo;
    eo.qubits = options.qubits;
    eo.limit = options.limit;

    SurveyResult result;
    result.report = enumerate_doilies(eo, ptrs);

    TypeTableBuilder merged(options.qubits);
    for (const auto& w : workers) {
        merged.merge(w->table);
        result.properties.merge(w->tally);
        result.degree_violations += w->degree_violations;
        if (!result.first_degree_violation) result.first_degree_violation = w->first_degree_violation;
    }
    result.table = merged.build();
    for (size_t v = 0; v < (1u << kDoilyLines); ++v) {
        for (const auto& w : workers) {
            if (w->degree_cache[v] >= 0) {
                ++result.distinct_valuations;
                break;
            }
        }
    }
    return result;
}

}  // namespace doily
