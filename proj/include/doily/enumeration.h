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
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "doily/counting.h"
#include "doily/doily.h"

namespace doily {

/// All centers of an ovoid's root triad form an affine subspace
/// base + span(kernel) of dimension 2N - 4.
struct CenterSpace {
    Word base = 0;
    std::array<Word, 2 * kMaxQubits> kernel{};
    int dimension = 0;

    std::uint64_t size() const { return std::uint64_t{1} << dimension; }

    /// Visits every center in Gray-code order.
    template <typename F>
    void for_each(F&& visit) const {
        Word c = base;
        visit(c);
        const std::uint64_t n = size();
        for (std::uint64_t i = 1; i < n; ++i) {
            c ^= kernel[static_cast<size_t>(std::countr_zero(i))];
            visit(c);
        }
    }
};

/// Solves for the points commuting with ovoid[0..2] and anticommuting with
/// ovoid[3..4]. The ovoid must be sorted.
CenterSpace center_space(const std::array<Word, 5>& ovoid, int qubits);

/// Centers of the ovoid's three smallest points that anticommute with the
/// two largest, in ascending order.
std::vector<Observable> find_centers(const Ovoid& ovoid);

/// Emits every ovoid of W(2N-1, 2) exactly once, in ascending order.
void enumerate_ovoids(int qubits, const std::function<void(const Ovoid&)>& sink);

/// Parallel ovoid count; threads == 0 means hardware concurrency.
std::uint64_t count_ovoids(int qubits, unsigned threads = 0);

struct EnumerationOptions {
    int qubits = 2;
    /// Used by the callback overload only; 0 means hardware concurrency.
    unsigned threads = 0;
    /// Stop once this many doilies have been delivered.
    std::optional<std::uint64_t> limit;
    /// When false every root is completed and delivered, so each doily
    /// appears once per ovoid it contains.
    bool canonical_filter = true;
};

struct EnumerationReport {
    std::vector<std::uint64_t> per_worker;
    std::uint64_t total = 0;
    bool truncated = false;
    double seconds = 0.0;

    counting::BigCount total_count() const { return counting::BigCount(total); }
};

/// Per-worker consumer. Each instance is only ever called from one thread.
class DoilyVisitor {
   public:
    virtual ~DoilyVisitor() = default;
    virtual void visit(const Doily& doily, const Ovoid& generating_ovoid) = 0;
};

/// Runs the ovoid-rooted generation with one worker thread per visitor.
/// Exceptions thrown by a visitor stop all workers and are rethrown.
EnumerationReport enumerate_doilies(const EnumerationOptions& options, std::span<DoilyVisitor* const> workers);

/// Convenience overload with a single sink that must be thread-safe.
EnumerationReport enumerate_doilies(const EnumerationOptions& options,
                                    const std::function<void(const Doily&)>& sink);

/// Resolves a requested thread count (0 = hardware concurrency, at least 1).
unsigned resolve_threads(unsigned requested);

}  // namespace doily
