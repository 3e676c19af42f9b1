// goldgraph: element-order prime graphs of alternating groups, Goldbach
// decompositions, and the equivalence checks between them. All data output
// is byte-deterministic: sorted containers, no timestamps.

#include <atomic>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldgraph/errors.hpp"
#include "goldgraph/partitions.hpp"
#include "goldgraph/primegraph.hpp"
#include "goldgraph/primes.hpp"
#include "goldgraph/theorems.hpp"

namespace {

using nlohmann::ordered_json;
using namespace goldgraph;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;
constexpr int kExitTheoremViolation = 4;

primes::PrimeSieve make_sieve(std::uint64_t requested, std::uint64_t minimum) {
    std::uint64_t limit = std::max<std::uint64_t>(minimum, 100);
    if (requested != 0) {
        if (requested < minimum)
            throw std::invalid_argument("--limit is smaller than this invocation needs (" +
                                        std::to_string(minimum) + ")");
        limit = requested;
    }
    return primes::PrimeSieve(limit);
}

struct SpectrumArgs {
    std::uint32_t n = 0;
    std::string group = "A";
    std::string format = "text";
};

int run_spectrum(const SpectrumArgs& a) {
    const auto kind = a.group == "A" ? partitions::GroupKind::alternating
                                     : partitions::GroupKind::symmetric;
    const auto spec = partitions::spectrum(a.n, kind);
    if (a.format == "json") {
        ordered_json j;
        j["n"] = spec.degree;
        j["group"] = a.group;
        j["orders"] = spec.orders;
        std::cout << j.dump() << "\n";
    } else if (a.format == "csv") {
        std::cout << "order\n";
        for (auto o : spec.orders) std::cout << o << "\n";
    } else {
        for (std::size_t i = 0; i < spec.orders.size(); ++i)
            std::cout << (i ? " " : "") << spec.orders[i];
        std::cout << "\n";
    }
    return kExitOk;
}

struct GraphArgs {
    std::uint32_t n = 0;
    std::string builder = "criterion";
    std::string format = "text";
    std::uint64_t limit = 0;
};

int run_graph(const GraphArgs& a) {
    primegraph::PrimeGraph g;
    if (a.builder == "criterion") {
        const auto sieve = make_sieve(a.limit, 2ULL * a.n);
        g = primegraph::build_by_criterion(a.n, sieve);
    } else {
        g = primegraph::build_by_spectrum(a.n);
    }
    if (a.format == "json") {
        std::cout << primegraph::to_json(g).dump() << "\n";
    } else if (a.format == "dot") {
        std::cout << primegraph::to_dot(g);
    } else {
        std::cout << "degree: " << g.degree << "\n";
        std::cout << "vertices:";
        for (auto v : g.vertices) std::cout << " " << v;
        std::cout << "\nedges:";
        for (const auto& [p, q] : g.edges) std::cout << " " << p << "-" << q;
        std::cout << "\n";
    }
    return kExitOk;
}

struct TableArgs {
    std::uint32_t from = 4;
    std::uint32_t to = 30;
    std::string format = "text";
    std::uint64_t limit = 0;
};

int run_table(const TableArgs& a) {
    const auto sieve = make_sieve(a.limit, 2ULL * a.to);
    const auto rows = theorems::edge_diff_table(a.from, a.to, sieve);
    if (a.format == "csv") {
        std::cout << theorems::table_to_csv(rows);
    } else if (a.format == "json") {
        auto arr = ordered_json::array();
        for (const auto& r : rows) arr.push_back({{"n", r.n}, {"d", r.d}});
        std::cout << arr.dump() << "\n";
    } else {
        std::cout << "n d\n";
        for (const auto& r : rows) std::cout << r.n << " " << r.d << "\n";
    }
    return kExitOk;
}

struct VerifyArgs {
    std::uint64_t n2 = 0;
    std::string format = "json";
    std::uint64_t limit = 0;
    std::uint64_t part7_limit = 100;
};

void print_report_text(const theorems::CharacterizationReport& r) {
    std::cout << "n2: " << r.n2 << "\n";
    std::cout << "part1_pairs:";
    for (const auto& [p, q] : r.part1_pairs.pairs) std::cout << " " << p << "+" << q;
    std::cout << "\npart2_proper: " << (r.part2_proper ? "true" : "false") << "\n";
    std::cout << "part3_diff: " << r.part3_diff << "\n";
    std::cout << "part4_applicable: " << (r.part4_applicable ? "true" : "false") << "\n";
    std::cout << "part4_diff: " << r.part4_diff << "\n";
    for (const auto& [label, w] :
         {std::pair{"part5_witness", &r.part5_witness}, {"part6_witness", &r.part6_witness}}) {
        std::cout << label << ":";
        if (*w) {
            std::cout << " q=" << (*w)->q << " new={";
            for (std::size_t i = 0; i < (*w)->new_primes.size(); ++i)
                std::cout << (i ? "," : "") << (*w)->new_primes[i];
            std::cout << "}";
        } else {
            std::cout << " none";
        }
        std::cout << "\n";
    }
    std::cout << "part7_dims:";
    if (r.part7_dims)
        std::cout << " " << r.part7_dims->first << " " << r.part7_dims->second;
    else
        std::cout << " skipped";
    std::cout << "\nall_equivalent: " << (r.all_equivalent ? "true" : "false") << "\n";
}

int run_verify(const VerifyArgs& a) {
    const auto sieve = make_sieve(a.limit, a.n2);
    theorems::VerifyOptions opt;
    opt.part7_degree_limit = a.part7_limit;
    const auto r = theorems::verify_characterizations(a.n2, sieve, opt);
    if (a.format == "text")
        print_report_text(r);
    else
        std::cout << theorems::report_to_json(r).dump() << "\n";
    return r.all_equivalent ? kExitOk : kExitTheoremViolation;
}

struct ScanArgs {
    std::string kind;
    std::optional<std::uint32_t> from;
    std::optional<std::uint32_t> to;
    std::uint32_t jobs = 1;
    std::string format = "text";
    std::uint64_t limit = 0;
    std::uint64_t part7_limit = 100;
};

int run_scan_recognizability(const ScanArgs& a) {
    const std::uint32_t from = a.from.value_or(4);
    const std::uint32_t to = a.to.value_or(29);
    const auto sieve = make_sieve(a.limit, 2ULL * to + 1);
    const auto zero = theorems::recognizability_scan(from, to, sieve);
    if (a.format == "json") {
        ordered_json j;
        j["kind"] = "recognizability";
        j["from"] = from;
        j["to"] = to;
        j["zero_diff"] = zero;
        std::cout << j.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < zero.size(); ++i) std::cout << (i ? " " : "") << zero[i];
        std::cout << "\n";
    }
    return kExitOk;
}

int run_scan_theorem_a(const ScanArgs& a) {
    const std::uint32_t from = a.from.value_or(4);
    const std::uint32_t to = a.to.value_or(50);
    if (from < 4) throw std::invalid_argument("scan theorem-a: from >= 4 required");
    if (to < from) throw std::invalid_argument("scan theorem-a: empty range");
    const auto sieve = make_sieve(a.limit, 2ULL * to);
    theorems::VerifyOptions opt;
    opt.part7_degree_limit = a.part7_limit;

    const std::uint32_t count = to - from + 1;
    std::vector<theorems::CharacterizationReport> reports(count);
    const std::uint32_t jobs = std::max<std::uint32_t>(1, a.jobs);
    std::atomic<std::uint32_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        try {
            for (std::uint32_t i = cursor.fetch_add(1); i < count; i = cursor.fetch_add(1))
                reports[i] = theorems::verify_characterizations(2ULL * (from + i), sieve, opt);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::uint32_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::vector<const theorems::CharacterizationReport*> violations;
    for (const auto& r : reports)
        if (!r.all_equivalent) violations.push_back(&r);

    if (a.format == "json") {
        ordered_json j;
        j["kind"] = "theorem-a";
        j["from"] = from;
        j["to"] = to;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) j["reports"].push_back(theorems::report_to_json(r));
        j["violations"] = violations.size();
        std::cout << j.dump() << "\n";
    } else {
        for (const auto& r : reports)
            std::cout << "2n=" << r.n2 << " d=" << r.part3_diff << " all_equivalent="
                      << (r.all_equivalent ? "true" : "false") << "\n";
        std::cout << (violations.empty() ? "all equivalent" : "VIOLATIONS FOUND") << "\n";
    }
    if (!violations.empty()) {
        auto rep = ordered_json::array();
        for (const auto* r : violations) rep.push_back(theorems::report_to_json(*r));
        std::cerr << "theorem violation report: " << rep.dump() << "\n";
        return kExitTheoremViolation;
    }
    return kExitOk;
}

// shared shape for the boolean scans (iso, odd-gain, rosser)
int run_boolean_scan(const ScanArgs& a, const char* kind, std::uint32_t def_from,
                     std::uint32_t def_to, std::uint64_t sieve_span_factor,
                     std::uint64_t sieve_span_offset,
                     const std::function<bool(std::uint32_t, const primes::PrimeSieve&)>& check) {
    const std::uint32_t from = a.from.value_or(def_from);
    const std::uint32_t to = a.to.value_or(def_to);
    if (to < from) throw std::invalid_argument("scan: empty range");
    const auto sieve = make_sieve(a.limit, sieve_span_factor * to + sieve_span_offset);
    std::vector<std::uint32_t> failures;
    for (std::uint32_t n = from; n <= to; ++n)
        if (!check(n, sieve)) failures.push_back(n);

    if (a.format == "json") {
        ordered_json j;
        j["kind"] = kind;
        j["from"] = from;
        j["to"] = to;
        j["failures"] = failures;
        std::cout << j.dump() << "\n";
    } else {
        if (failures.empty()) {
            std::cout << kind << " holds on [" << from << "," << to << "]\n";
        } else {
            std::cout << kind << " FAILS at:";
            for (auto n : failures) std::cout << " " << n;
            std::cout << "\n";
        }
    }
    if (!failures.empty()) {
        ordered_json rep;
        rep["kind"] = kind;
        rep["failures"] = failures;
        std::cerr << "theorem violation report: " << rep.dump() << "\n";
        return kExitTheoremViolation;
    }
    return kExitOk;
}

int run_scan(const ScanArgs& a) {
    if (a.kind == "recognizability") return run_scan_recognizability(a);
    if (a.kind == "theorem-a") return run_scan_theorem_a(a);
    if (a.kind == "iso")
        return run_boolean_scan(a, "iso", 6, 200, 2, 0, theorems::iso_step_check);
    if (a.kind == "odd-gain")
        return run_boolean_scan(a, "odd-gain", 4, 200, 2, 1, theorems::odd_gain_check);
    if (a.kind == "rosser")
        return run_boolean_scan(a, "rosser", 37, 1000000, 1, 0,
                                [](std::uint32_t x, const primes::PrimeSieve& s) {
                                    return primes::rosser_interval_holds(s, x);
                                });
    throw std::invalid_argument("unknown scan kind: " + a.kind);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"prime graphs of alternating groups and Goldbach decompositions"};
    app.require_subcommand(1);

    SpectrumArgs spectrum_args;
    auto* cmd_spectrum = app.add_subcommand("spectrum", "element orders of A_n or S_n");
    cmd_spectrum->add_option("n", spectrum_args.n, "degree")->required();
    cmd_spectrum->add_option("-g,--group", spectrum_args.group, "A or S")
        ->check(CLI::IsMember({"A", "S"}));
    cmd_spectrum->add_option("-f,--format", spectrum_args.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    GraphArgs graph_args;
    auto* cmd_graph = app.add_subcommand("graph", "element-order prime graph of A_n");
    cmd_graph->add_option("n", graph_args.n, "degree")->required();
    cmd_graph->add_option("-b,--builder", graph_args.builder, "criterion|spectrum")
        ->check(CLI::IsMember({"criterion", "spectrum"}));
    cmd_graph->add_option("-f,--format", graph_args.format, "text|json|dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    cmd_graph->add_option("--limit", graph_args.limit, "sieve limit override");

    TableArgs table_args;
    auto* cmd_table = app.add_subcommand("table", "edge differences d(n) over a range");
    cmd_table->add_option("--from", table_args.from, "first n (default 4)");
    cmd_table->add_option("--to", table_args.to, "last n (default 30)");
    cmd_table->add_option("-f,--format", table_args.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd_table->add_option("--limit", table_args.limit, "sieve limit override");

    VerifyArgs verify_args;
    auto* cmd_verify = app.add_subcommand("verify", "check all characterizations of one even number");
    cmd_verify->add_option("n2", verify_args.n2, "even number >= 8")->required();
    cmd_verify->add_option("-f,--format", verify_args.format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_verify->add_option("--limit", verify_args.limit, "sieve limit override");
    cmd_verify->add_option("--part7-limit", verify_args.part7_limit,
                           "skip part 7 above this degree (default 100)");

    ScanArgs scan_args;
    auto* cmd_scan = app.add_subcommand("scan", "range scans");
    cmd_scan
        ->add_option("kind", scan_args.kind,
                     "recognizability|theorem-a|iso|odd-gain|rosser")
        ->required();
    cmd_scan->add_option("--from", scan_args.from, "range start");
    cmd_scan->add_option("--to", scan_args.to, "range end");
    cmd_scan->add_option("-j,--jobs", scan_args.jobs, "worker threads (theorem-a)");
    cmd_scan->add_option("-f,--format", scan_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd_scan->add_option("--limit", scan_args.limit, "sieve limit override");
    cmd_scan->add_option("--part7-limit", scan_args.part7_limit,
                         "skip part 7 above this degree (default 100)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (cmd_spectrum->parsed()) return run_spectrum(spectrum_args);
        if (cmd_graph->parsed()) return run_graph(graph_args);
        if (cmd_table->parsed()) return run_table(table_args);
        if (cmd_verify->parsed()) return run_verify(verify_args);
        if (cmd_scan->parsed()) return run_scan(scan_args);
        return kExitUsage;
    } catch (const theorem_violation& e) {
        std::cout << e.report_json() << "\n";
        std::cerr << "theorem violation: " << e.what() << "\n";
        return kExitTheoremViolation;
    } catch (const resource_limit_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResourceLimit;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
