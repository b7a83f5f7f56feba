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

// Command-line front end: formulas, ovoids, enumerate, classify,
// contextuality, hexad and verify.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "doily/classification.h"
#include "doily/contextuality.h"
#include "doily/counting.h"
#include "doily/enumeration.h"
#include "doily/survey.h"
#include "doily/type_table.h"
#include "json.hpp"

namespace {

using namespace doily;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;
constexpr int kExitInvariant = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Settings {
    unsigned threads = 0;
    int qubits = 3;
    int min_qubits = 2;
    int max_qubits = 9;
    std::optional<std::uint64_t> limit;
    std::string output;
    std::string format = "csv";
    bool emit_points = false;
    std::string points;
    std::string config;
    std::string golden;
    bool properties = false;
};

unsigned resolve_cli_threads(unsigned flag) {
    if (flag > 0) return flag;
    if (const char* env = std::getenv("DOILY_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
        throw UsageError(std::string("DOILY_THREADS must be a positive integer, got '") + env + "'");
    }
    return resolve_threads(0);
}

// Peak resident set size in kB, from /proc; 0 when unavailable.
long peak_rss_kb() {
    std::ifstream status("/proc/self/status");
    std::string line;
    while (std::getline(status, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            return std::stol(line.substr(6));
        }
    }
    return 0;
}

void print_run_report(const EnumerationReport& r) {
    std::cerr << "run: elapsed_s=" << r.seconds << " total=" << r.total << " per_worker=";
    for (size_t i = 0; i < r.per_worker.size(); ++i) {
        std::cerr << (i ? "," : "") << r.per_worker[i];
    }
    std::cerr << " peak_rss_kb=" << peak_rss_kb() << (r.truncated ? " truncated" : "") << '\n';
}

// Writes to --output when given, stdout otherwise.
class Sink {
   public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_) throw UsageError("cannot write " + path);
        }
    }
    std::ostream& out() { return file_ ? *file_ : std::cout; }

   private:
    std::unique_ptr<std::ofstream> file_;
};

std::vector<Observable> parse_points(const std::string& text) {
    std::string s = text;
    for (char& c : s) {
        if (c == ',') c = ' ';
    }
    std::istringstream in(s);
    std::vector<Observable> out;
    std::string tok;
    while (in >> tok) out.push_back(Observable::parse(tok));
    if (out.size() != kDoilyPoints) {
        throw UsageError("expected 15 observables, got " + std::to_string(out.size()));
    }
    return out;
}

int cmd_formulas(const Settings& s) {
    if (s.min_qubits < 2 || s.max_qubits < s.min_qubits) throw UsageError("need 2 <= --min-qubits <= --max-qubits");
    Sink sink(s.output);
    auto& out = sink.out();
    if (s.format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = s.min_qubits; n <= s.max_qubits; ++n) {
            nlohmann::ordered_json j;
            j["N"] = n;
            j["D_l"] = counting::to_decimal(counting::count_linear(n));
            j["D_q"] = counting::to_decimal(counting::count_quadratic(n));
            j["D"] = counting::to_decimal(counting::count_total(n));
            rows.push_back(std::move(j));
        }
        out << rows.dump(2) << '\n';
        return kExitOk;
    }
    out << "N,D_l,D_q,D\n";
    for (int n = s.min_qubits; n <= s.max_qubits; ++n) {
        out << n << ',' << counting::to_decimal(counting::count_linear(n)) << ','
            << counting::to_decimal(counting::count_quadratic(n)) << ','
            << counting::to_decimal(counting::count_total(n)) << '\n';
    }
    return kExitOk;
}

int cmd_ovoids(const Settings& s) {
    Sink sink(s.output);
    if (s.emit_points) {
        enumerate_ovoids(s.qubits, [&](const Ovoid& o) { sink.out() << o.str() << '\n'; });
        return kExitOk;
    }
    const auto start = std::chrono::steady_clock::now();
    const auto n = count_ovoids(s.qubits, resolve_cli_threads(s.threads));
    sink.out() << n << '\n';
    std::cerr << "run: elapsed_s="
              << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
              << " peak_rss_kb=" << peak_rss_kb() << '\n';
    return kExitOk;
}

int cmd_enumerate(const Settings& s) {
    Sink sink(s.output);
    std::mutex out_mutex;
    struct Worker final : DoilyVisitor {
        bool emit = false;
        std::ostream* out = nullptr;
        std::mutex* m = nullptr;
        std::string buffer;
        std::uint64_t linear = 0;
        void visit(const Doily& d, const Ovoid&) override {
            linear += is_linear(d) ? 1 : 0;
            if (!emit) return;
            buffer += d.str();
            buffer += '\n';
            if (buffer.size() > (1u << 16)) flush();
        }
        void flush() {
            std::lock_guard lock(*m);
            *out << buffer;
            buffer.clear();
        }
    };
    const unsigned n = resolve_cli_threads(s.threads);
    std::vector<Worker> workers(n);
    std::vector<DoilyVisitor*> ptrs;
    for (auto& w : workers) {
        w.emit = s.emit_points;
        w.out = &sink.out();
        w.m = &out_mutex;
        ptrs.push_back(&w);
    }
    EnumerationOptions opt;
    opt.qubits = s.qubits;
    opt.limit = s.limit;
    const auto report = enumerate_doilies(opt, ptrs);
    std::uint64_t linear = 0;
    for (auto& w : workers) {
        if (s.emit_points) w.flush();
        linear += w.linear;
    }
    if (!s.emit_points) {
        sink.out() << "N,doilies,linear,quadratic\n"
                   << s.qubits << ',' << report.total << ',' << linear << ',' << report.total - linear << '\n';
    }
    print_run_report(report);
    return kExitOk;
}

int cmd_classify(const Settings& s) {
    if (s.format != "csv" && s.format != "json") throw UsageError("--format must be csv or json");
    SurveyOptions opt;
    opt.qubits = s.qubits;
    opt.threads = resolve_cli_threads(s.threads);
    opt.limit = s.limit;
    opt.quadric_checks = false;
    const SurveyResult r = survey(opt);
    Sink sink(s.output);
    if (s.format == "json") {
        write_json(sink.out(), r.table);
    } else {
        write_csv(sink.out(), r.table);
    }
    print_run_report(r.report);
    return kExitOk;
}

int cmd_contextuality(const Settings& s) {
    if (s.points.empty() == s.config.empty()) throw UsageError("give exactly one of --points or --config");
    LineMask valuation = 0;
    if (!s.config.empty()) {
        const auto c = parse_neg_line_config(s.config);
        if (!c) throw UsageError("unknown configuration '" + s.config + "'");
        valuation = reference_pattern(*c);
    } else {
        valuation = valuation_of(doily_from_points(parse_points(s.points)));
    }
    std::cout << degree(doily_incidence(valuation)) << '\n';
    return kExitOk;
}

int cmd_hexad(const Settings& s) {
    std::optional<Doily> source;
    if (!s.points.empty()) {
        source = doily_from_points(parse_points(s.points));
    } else {
        EnumerationOptions opt;
        opt.qubits = s.qubits;
        opt.threads = 1;
        struct First final : DoilyVisitor {
            std::optional<Doily> found;
            void visit(const Doily& d, const Ovoid&) override {
                if (!found && !is_linear(d)) found = d;
            }
        } first;
        DoilyVisitor* ptr = &first;
        // Quadratic doilies appear early; stop after a modest prefix.
        opt.limit = 10000;
        enumerate_doilies(opt, std::span<DoilyVisitor* const>(&ptr, 1));
        if (!first.found) throw UsageError("no quadratic doily at " + std::to_string(s.qubits) + " qubits");
        source = first.found;
    }
    if (is_linear(*source)) throw UsageError("hexads exist for quadratic doilies only");
    Sink sink(s.output);
    auto& out = sink.out();
    out << "source: " << source->str() << '\n';
    const auto ovoids = ovoids_of(*source);
    const auto six = hexad(*source);
    for (size_t i = 0; i < six.size(); ++i) {
        out << "ovoid " << i + 1 << ": " << ovoids[i].str() << "\n  linear: " << six[i].str() << '\n';
    }
    return kExitOk;
}

struct Check {
    std::string name;
    bool pass;
    std::string detail;
};

int cmd_verify(const Settings& s) {
    if (s.qubits < 2 || s.qubits > 5) throw UsageError("verify supports 2 to 5 qubits");
    std::string golden = s.golden;
    if (golden.empty() && s.qubits == 3) golden = std::string(DOILY_DATA_DIR) + "/appendix_a.csv";
    if (golden.empty() && s.qubits == 4) golden = std::string(DOILY_DATA_DIR) + "/appendix_b.csv";
    std::optional<TypeTable> expected;
    if (!golden.empty()) expected = read_csv_file(golden);

    SurveyOptions opt;
    opt.qubits = s.qubits;
    opt.threads = resolve_cli_threads(s.threads);
    opt.properties = s.properties || s.qubits <= 4;
    opt.contextuality = true;
    const SurveyResult r = survey(opt);
    const TypeTable& t = r.table;

    std::vector<Check> checks;
    auto exact = [&](const std::string& name, const counting::BigCount& want, std::uint64_t got) {
        checks.push_back({name, counting::BigCount(got) == want,
                          "expected " + counting::to_decimal(want) + ", got " + std::to_string(got)});
    };
    exact("total", counting::count_total(s.qubits), r.report.total);
    exact("linear", counting::count_linear(s.qubits), t.total(Character::linear));
    exact("quadratic", counting::count_quadratic(s.qubits), t.total(Character::quadratic));
    std::vector<std::string> diff;
    if (expected) {
        diff = diff_tables(*expected, t);
        checks.push_back({"golden table", diff.empty(),
                          golden + ": " + std::to_string(diff.size()) + " differing rows"});
    }
    if (s.qubits == 5) {
        checks.push_back({"type rows", t.rows.size() == 447 && t.row_count(Character::linear) == 89,
                          std::to_string(t.rows.size()) + " rows, " +
                              std::to_string(t.row_count(Character::linear)) + " linear, " +
                              std::to_string(t.row_count(Character::quadratic)) + " quadratic"});
        const auto parity = parity_link_violations(t);
        checks.push_back({"B+C parity", parity.empty(), std::to_string(parity.size()) + " violations"});
    }
    for (int p = 0; p < kProperties; ++p) {
        const auto prop = static_cast<Property>(p);
        if (r.properties.checked(prop) == 0) continue;
        std::string detail = std::to_string(r.properties.violations(prop)) + " of " +
                             std::to_string(r.properties.checked(prop));
        if (const auto& f = r.properties.first_failure(prop)) detail += "; first: " + *f;
        checks.push_back({std::string(to_string(prop)), r.properties.violations(prop) == 0, detail});
    }
    checks.push_back({"contextuality degree 3", r.degree_violations == 0,
                      std::to_string(r.degree_violations) + " violations over " +
                          std::to_string(r.distinct_valuations) + " distinct valuations"});

    bool ok = true;
    for (const auto& c : checks) {
        std::cout << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        ok = ok && c.pass;
    }
    for (const auto& line : diff) std::cout << "  " << line << '\n';
    print_run_report(r.report);
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate and classify multi-qubit doilies"};
    app.require_subcommand(1);
    Settings s;

    auto add_threads = [&](CLI::App* c) {
        c->add_option("--threads", s.threads, "Worker threads (default: DOILY_THREADS, then all cores)")
            ->check(CLI::PositiveNumber);
    };
    auto add_qubits = [&](CLI::App* c) {
        c->add_option("--qubits,-n", s.qubits, "Number of qubits")->check(CLI::Range(2, 15));
    };
    auto add_output = [&](CLI::App* c) { c->add_option("--output,-o", s.output, "Output file (default: stdout)"); };

    auto* formulas = app.add_subcommand("formulas", "Closed-form doily counts as CSV");
    formulas->add_option("--min-qubits", s.min_qubits, "Smallest N")->check(CLI::Range(2, 64));
    formulas->add_option("--max-qubits", s.max_qubits, "Largest N")->check(CLI::Range(2, 64));
    formulas->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_output(formulas);

    auto* ovoids = app.add_subcommand("ovoids", "Count (or list) ovoids");
    add_qubits(ovoids);
    add_threads(ovoids);
    add_output(ovoids);
    ovoids->add_flag("--emit-points", s.emit_points, "List every ovoid");

    auto* enumerate = app.add_subcommand("enumerate", "Enumerate doilies");
    add_qubits(enumerate);
    add_threads(enumerate);
    add_output(enumerate);
    enumerate->add_option("--limit", s.limit, "Stop after this many doilies");
    enumerate->add_flag("--emit-points", s.emit_points, "Print each doily's sorted points, one per line");

    auto* classify_cmd = app.add_subcommand("classify", "Build the type table");
    add_qubits(classify_cmd);
    add_threads(classify_cmd);
    add_output(classify_cmd);
    classify_cmd->add_option("--limit", s.limit, "Stop after this many doilies");
    classify_cmd->add_option("--format", s.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* context = app.add_subcommand("contextuality", "Contextuality degree of a doily or configuration");
    context->add_option("--points", s.points, "Fifteen observables separated by spaces or commas");
    context->add_option("--config", s.config, "Negative-line configuration tag such as 7A");

    auto* hexad_cmd = app.add_subcommand("hexad", "Linear doilies through the ovoids of a quadratic doily");
    hexad_cmd->add_option("--points", s.points, "Fifteen observables of a quadratic doily");
    add_qubits(hexad_cmd);
    add_output(hexad_cmd);

    auto* verify = app.add_subcommand("verify", "Run the invariant suite and compare with golden tables");
    verify->add_option("--qubits,-n", s.qubits, "Number of qubits")->check(CLI::Range(2, 5));
    add_threads(verify);
    verify->add_option("--golden", s.golden, "Golden CSV (default: bundled table for 3 and 4 qubits)");
    verify->add_flag("--properties", s.properties, "Run the full property suite at five qubits too");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*formulas) return cmd_formulas(s);
        if (*ovoids) return cmd_ovoids(s);
        if (*enumerate) return cmd_enumerate(s);
        if (*classify_cmd) return cmd_classify(s);
        if (*context) return cmd_contextuality(s);
        if (*hexad_cmd) return cmd_hexad(s);
        if (*verify) return cmd_verify(s);
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
