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

#include "doily/enumeration.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace doily {

namespace {

void require_enumerable(int qubits) {
    if (qubits < 2) {
        throw std::invalid_argument("doilies need at least two qubits");
    }
    // Word counts must stay addressable by the loop indices below.
    if (qubits > 15) {
        throw std::invalid_argument("enumeration is limited to 15 qubits");
    }
}

// Emits every ovoid whose smallest point is `first`, in ascending order.
// Scratch vectors are reused across calls.
template <typename F>
void for_each_ovoid_from(Word first, Word last_word, std::vector<Word>& l1, std::vector<Word>& l2,
                         std::vector<Word>& l3, F&& emit) {
    l1.clear();
    for (Word w = first + 1; w <= last_word; ++w) {
        if (!word::commute(first, w)) {
            l1.push_back(w);
        }
    }
    for (size_t i2 = 0; i2 < l1.size(); ++i2) {
        const Word o2 = l1[i2];
        l2.clear();
        for (size_t j = i2 + 1; j < l1.size(); ++j) {
            if (!word::commute(o2, l1[j])) {
                l2.push_back(l1[j]);
            }
        }
        for (size_t i3 = 0; i3 < l2.size(); ++i3) {
            const Word o3 = l2[i3];
            l3.clear();
            for (size_t j = i3 + 1; j < l2.size(); ++j) {
                if (!word::commute(o3, l2[j])) {
                    l3.push_back(l2[j]);
                }
            }
            const Word partial = first ^ o2 ^ o3;
            for (const Word o4 : l3) {
                const Word o5 = partial ^ o4;
                if (o5 <= o4) {
                    continue;
                }
                if (word::commute(o5, first) || word::commute(o5, o2) || word::commute(o5, o3) ||
                    word::commute(o5, o4)) {
                    continue;
                }
                emit(std::array<Word, 5>{first, o2, o3, o4, o5});
            }
        }
    }
}

// Shared scheduling: workers pull ovoid-minimum values from an atomic cursor.
template <typename Work>
void run_workers(unsigned workers, Word last_word, Work&& work) {
    std::atomic<Word> cursor{1};
    std::atomic<bool> stop{false};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto body = [&](unsigned worker) {
        try {
            std::vector<Word> l1, l2, l3;
            l1.reserve(static_cast<size_t>(last_word));
            l2.reserve(static_cast<size_t>(last_word));
            l3.reserve(static_cast<size_t>(last_word));
            while (!stop.load(std::memory_order_relaxed)) {
                const Word first = cursor.fetch_add(1, std::memory_order_relaxed);
                if (first > last_word) {
                    break;
                }
                if (!work(worker, first, l1, l2, l3)) {
                    stop.store(true);
                }
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) {
                failure = std::current_exception();
            }
            stop.store(true);
        }
    };

    if (workers == 1) {
        body(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back(body, w);
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

CenterSpace center_space(const std::array<Word, 5>& ovoid, int qubits) {
    // Rows: linear functionals c -> sigma(c, o_i); right-hand side 0,0,0,1.
    // The fifth constraint follows from the other four since the ovoid's
    // words XOR to zero.
    std::array<Word, 4> rows{};
    std::array<int, 4> rhs{0, 0, 0, 1};
    for (size_t i = 0; i < 4; ++i) {
        rows[i] = word::swap_lanes(ovoid[i]);
    }
    std::array<int, 4> pivot{};
    for (size_t i = 0; i < 4; ++i) {
        if (rows[i] == 0) {
            throw std::invalid_argument("ovoid points are linearly dependent");
        }
        pivot[i] = 63 - std::countl_zero(rows[i]);
        for (size_t j = 0; j < 4; ++j) {
            if (j != i && (rows[j] >> pivot[i] & 1)) {
                rows[j] ^= rows[i];
                rhs[j] ^= rhs[i];
            }
        }
        // Rows already processed keep their pivots: row i carries none of them.
    }
    CenterSpace space;
    Word pivot_mask = 0;
    for (size_t i = 0; i < 4; ++i) {
        pivot_mask |= Word{1} << pivot[i];
        if (rhs[i]) {
            space.base |= Word{1} << pivot[i];
        }
    }
    const int bits = 2 * qubits;
    for (int b = 0; b < bits; ++b) {
        if (pivot_mask >> b & 1) {
            continue;
        }
        Word k = Word{1} << b;
        for (size_t i = 0; i < 4; ++i) {
            if (rows[i] >> b & 1) {
                k |= Word{1} << pivot[i];
            }
        }
        space.kernel[static_cast<size_t>(space.dimension++)] = k;
    }
    return space;
}

std::vector<Observable> find_centers(const Ovoid& ovoid) {
    std::vector<Word> words;
    center_space(ovoid.words(), ovoid.qubits()).for_each([&](Word c) { words.push_back(c); });
    std::sort(words.begin(), words.end());
    std::vector<Observable> out;
    out.reserve(words.size());
    for (Word w : words) {
        out.push_back(Observable::from_word(w, ovoid.qubits()));
    }
    return out;
}

void enumerate_ovoids(int qubits, const std::function<void(const Ovoid&)>& sink) {
    require_enumerable(qubits);
    const Word last = word::lane_mask(qubits);
    std::vector<Word> l1, l2, l3;
    for (Word first = 1; first <= last; ++first) {
        for_each_ovoid_from(first, last, l1, l2, l3,
                            [&](const std::array<Word, 5>& o) { sink(Ovoid::trusted(o, qubits)); });
    }
}

std::uint64_t count_ovoids(int qubits, unsigned threads) {
    require_enumerable(qubits);
    const unsigned workers = resolve_threads(threads);
    std::vector<std::uint64_t> counts(workers, 0);
    run_workers(workers, word::lane_mask(qubits),
                [&](unsigned worker, Word first, auto& l1, auto& l2, auto& l3) {
                    std::uint64_t local = 0;
                    for_each_ovoid_from(first, word::lane_mask(qubits), l1, l2, l3,
                                        [&](const std::array<Word, 5>&) { ++local; });
                    counts[worker] += local;
                    return true;
                });
    std::uint64_t total = 0;
    for (auto c : counts) {
        total += c;
    }
    return total;
}

EnumerationReport enumerate_doilies(const EnumerationOptions& options, std::span<DoilyVisitor* const> workers) {
    require_enumerable(options.qubits);
    if (workers.empty()) {
        throw std::invalid_argument("at least one worker is required");
    }
    const auto started = std::chrono::steady_clock::now();
    const int qubits = options.qubits;
    const AbstractDoily& g = abstract_doily();
    const auto& other = g.ovoids[static_cast<size_t>(g.other_ovoid_through_first)];

    // Abstract points outside the reference ovoid, checked by the fast filter.
    std::array<int, 10> rest{};
    {
        size_t n = 0;
        for (int p = 0; p < kDoilyPoints; ++p) {
            if (std::find(g.reference_ovoid.begin(), g.reference_ovoid.end(), p) == g.reference_ovoid.end()) {
                rest.at(n++) = p;
            }
        }
    }

    EnumerationReport report;
    report.per_worker.assign(workers.size(), 0);
    std::atomic<std::uint64_t> issued{0};
    std::atomic<bool> truncated{false};
    const bool limited = options.limit.has_value();
    const std::uint64_t limit = options.limit.value_or(0);
    if (limited && limit == 0) {
        report.truncated = true;
        return report;
    }

    run_workers(static_cast<unsigned>(workers.size()), word::lane_mask(qubits),
                [&](unsigned worker, Word first, auto& l1, auto& l2, auto& l3) {
                    DoilyVisitor& visitor = *workers[worker];
                    std::uint64_t& delivered = report.per_worker[worker];
                    bool keep_going = true;
                    for_each_ovoid_from(first, word::lane_mask(qubits), l1, l2, l3,
                                        [&](const std::array<Word, 5>& o) {
                        if (!keep_going) {
                            return;
                        }
                        const Ovoid ovoid = Ovoid::trusted(o, qubits);
                        center_space(o, qubits).for_each([&](Word center) {
                            if (!keep_going) {
                                return;
                            }
                            const Doily d = complete_doily_unchecked(o, center, qubits);
                            if (options.canonical_filter) {
                                // Every point lies on two of the six ovoids, so a point
                                // below o1 means a smaller ovoid exists. Otherwise only
                                // the other ovoid through o1 can beat this one.
                                for (int p : rest) {
                                    if (d.word(p) < first) {
                                        return;
                                    }
                                }
                                std::array<Word, 5> rival{};
                                for (size_t i = 0; i < 5; ++i) {
                                    rival[i] = d.word(other[i]);
                                }
                                std::sort(rival.begin(), rival.end());
                                if (rival < o) {
                                    return;
                                }
                            }
                            if (limited) {
                                if (issued.fetch_add(1, std::memory_order_relaxed) >= limit) {
                                    truncated.store(true);
                                    keep_going = false;
                                    return;
                                }
                            }
                            visitor.visit(d, ovoid);
                            ++delivered;
                        });
                    });
                    return keep_going;
                });

    for (auto c : report.per_worker) {
        report.total += c;
    }
    report.truncated = truncated.load();
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

EnumerationReport enumerate_doilies(const EnumerationOptions& options,
                                    const std::function<void(const Doily&)>& sink) {
    struct Forward final : DoilyVisitor {
        const std::function<void(const Doily&)>* sink;
        void visit(const Doily& d, const Ovoid&) override { (*sink)(d); }
    };
    const unsigned n = resolve_threads(options.threads);
    std::vector<Forward> visitors(n);
    std::vector<DoilyVisitor*> ptrs;
    for (auto& v : visitors) {
        v.sink = &sink;
        ptrs.push_back(&v);
    }
    return enumerate_doilies(options, ptrs);
}

}  // namespace doily
