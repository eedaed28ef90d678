// Command-line front end: single queries, batch CSV, oracle cross-checks
// and scaling benchmarks. Prints bare decimal integers; detail lives
// behind --trace.
//
// Exit codes: 0 ok, 2 invalid input, 3 internal assertion, 4 verify mismatch.

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "denum/bench.hpp"
#include "denum/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 3;
constexpr int kExitMismatch = 4;

denum::Integer parse_integer(const std::string& text, const char* what) {
    try {
        return denum::Integer(text);
    } catch (const std::invalid_argument&) {
        throw denum::invalid_input(std::string(what) + ": '" + text +
                                   "' is not an integer");
    }
}

denum::MuVector parse_mu(const std::string& text) {
    std::istringstream in(text);
    std::string part;
    std::vector<denum::Integer> parts;
    while (std::getline(in, part, ','))
        parts.push_back(parse_integer(part, "--mu component"));
    if (parts.size() != 3)
        throw denum::invalid_input("--mu expects three comma-separated integers");
    return denum::MuVector{parts[0], parts[1], parts[2]};
}

unsigned long default_seed() {
    const char* env = std::getenv("DENUM_SEED");
    if (!env || !*env)
        return 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw denum::invalid_input("DENUM_SEED must be a non-negative integer");
    return static_cast<unsigned long>(value);
}

struct CountArgs {
    std::string n, a, b, c;
    std::string mu;
    unsigned long seed = 0;
    std::string trace_path;
    bool verify = false;
};

int run_count(const CountArgs& args) {
    denum::ComputeOptions options;
    options.seed = args.seed;
    if (!args.mu.empty())
        options.mu = parse_mu(args.mu);

    std::ofstream trace_file;
    denum::TraceSink sink;
    if (!args.trace_path.empty()) {
        trace_file.open(args.trace_path);
        if (!trace_file)
            throw denum::invalid_input("cannot open trace file '" + args.trace_path + "'");
        sink = [&trace_file](const denum::TraceRecord& rec) {
            trace_file << denum::format_record(rec) << '\n';
        };
        options.trace = &sink;
    }

    const denum::Integer n = parse_integer(args.n, "n");
    const denum::Integer a = parse_integer(args.a, "a");
    const denum::Integer b = parse_integer(args.b, "b");
    const denum::Integer c = parse_integer(args.c, "c");

    const denum::Computation comp = denum::compute(n, a, b, c, options);
    std::cout << comp.count << std::endl;

    if (args.verify) {
        const denum::Integer expected = denum::oracle_count(n, a, b, c);
        if (expected != comp.count) {
            std::cerr << "verify mismatch: oracle says " << expected << std::endl;
            return kExitMismatch;
        }
    }
    return kExitOk;
}

struct BatchArgs {
    std::string input;
    std::string output = "-";
    unsigned jobs = 1;
    unsigned long seed = 0;
};

std::string batch_line(const std::string& line, unsigned long seed) {
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) {
        const auto from = field.find_first_not_of(" \t\r");
        const auto to = field.find_last_not_of(" \t\r");
        fields.push_back(from == std::string::npos
                             ? std::string()
                             : field.substr(from, to - from + 1));
    }
    const std::string echo =
        fields.size() == 4
            ? fields[0] + "," + fields[1] + "," + fields[2] + "," + fields[3]
            : line;
    try {
        if (fields.size() != 4)
            throw denum::invalid_input("expected four comma-separated values");
        denum::ComputeOptions options;
        options.seed = seed;
        const denum::Computation comp = denum::compute(
            parse_integer(fields[0], "n"), parse_integer(fields[1], "a"),
            parse_integer(fields[2], "b"), parse_integer(fields[3], "c"), options);
        return echo + "," + denum::to_string(comp.count);
    } catch (const denum::invalid_input&) {
        return echo + ",error:2";
    } catch (const denum::resource_limit&) {
        return echo + ",error:2";
    } catch (const denum::internal_error&) {
        return echo + ",error:3";
    }
}

int run_batch(const BatchArgs& args) {
    std::ifstream in(args.input);
    if (!in)
        throw denum::invalid_input("cannot read batch input '" + args.input + "'");

    std::vector<std::string> lines;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (first) {
            first = false;
            std::string lowered = line;
            for (char& ch : lowered)
                ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
            lowered.erase(std::remove(lowered.begin(), lowered.end(), ' '),
                          lowered.end());
            if (lowered == "n,a,b,c")
                continue; // header
        }
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue; // blank
        lines.push_back(line);
    }

    std::vector<std::string> results(lines.size());
    const unsigned jobs = std::max(1u, args.jobs);
    if (jobs == 1 || lines.size() < 2) {
        for (std::size_t i = 0; i < lines.size(); ++i)
            results[i] = batch_line(lines[i], args.seed);
    } else {
        std::atomic<std::size_t> next{0};
        const auto worker = [&]() {
            for (std::size_t i = next.fetch_add(1); i < lines.size();
                 i = next.fetch_add(1))
                results[i] = batch_line(lines[i], args.seed);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, lines.size()); ++t)
            pool.emplace_back(worker);
        for (std::thread& t : pool)
            t.join();
    }

    std::ofstream out_file;
    std::ostream* out = &std::cout;
    if (args.output != "-") {
        out_file.open(args.output);
        if (!out_file)
            throw denum::invalid_input("cannot open batch output '" + args.output + "'");
        out = &out_file;
    }
    for (const std::string& r : results)
        *out << r << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"denum: exact three-coin solution counting"};
    app.require_subcommand(1);

    unsigned long seed = 0;
    try {
        seed = default_seed();
    } catch (const denum::invalid_input& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInvalid;
    }

    CountArgs count_args;
    count_args.seed = seed;
    CLI::App* count = app.add_subcommand(
        "count", "Count solutions of a*x1 + b*x2 + c*x3 = n");
    count->add_option("n", count_args.n)->required();
    count->add_option("a", count_args.a)->required();
    count->add_option("b", count_args.b)->required();
    count->add_option("c", count_args.c)->required();
    count->add_option("--mu", count_args.mu,
                      "Force the slack direction mu1,mu2,mu3");
    count->add_option("--seed", count_args.seed, "Seed for random mu fallback");
    count->add_option("--trace", count_args.trace_path,
                      "Write one structured record per pipeline step");
    count->add_flag("--verify", count_args.verify,
                    "Cross-check against the DP oracle (guarded)");

    BatchArgs batch_args;
    batch_args.seed = seed;
    CLI::App* batch = app.add_subcommand(
        "batch", "Process a CSV of n,a,b,c lines (optional header)");
    batch->add_option("input", batch_args.input)->required();
    batch->add_option("-o,--output", batch_args.output,
                      "Output path ('-' for stdout)");
    batch->add_option("--jobs", batch_args.jobs, "Worker threads");
    batch->add_option("--seed", batch_args.seed, "Seed for random mu fallback");

    std::string on, oa, ob, oc;
    std::string oracle_limit = denum::to_string(denum::kOracleDefaultLimit);
    CLI::App* oracle = app.add_subcommand(
        "oracle", "Dynamic-programming reference count (small n only)");
    oracle->add_option("n", on)->required();
    oracle->add_option("a", oa)->required();
    oracle->add_option("b", ob)->required();
    oracle->add_option("c", oc)->required();
    oracle->add_option("--limit", oracle_limit, "DP table guard on n");

    denum::BenchOptions bench_options;
    bench_options.seed = seed;
    CLI::App* bench = app.add_subcommand(
        "bench", "Time random instances and check the log-scaling bounds");
    bench->add_option("--bits", bench_options.bits, "Bit length of b")
        ->check(CLI::Range(2u, 62u));
    bench->add_option("--samples", bench_options.samples, "Number of instances");
    bench->add_option("--seed", bench_options.seed, "RNG seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (*count)
            return run_count(count_args);
        if (*batch)
            return run_batch(batch_args);
        if (*oracle) {
            std::cout << denum::oracle_count(
                             parse_integer(on, "n"), parse_integer(oa, "a"),
                             parse_integer(ob, "b"), parse_integer(oc, "c"),
                             parse_integer(oracle_limit, "--limit"))
                      << std::endl;
            return kExitOk;
        }
        if (*bench) {
            const denum::BenchReport rep = denum::run_bench(bench_options);
            std::cout << denum::format_report(rep) << std::endl;
            if (!rep.bounds_ok || rep.mismatches > 0) {
                std::cerr << "bench: bound violation or oracle mismatch" << std::endl;
                return kExitInternal;
            }
            return kExitOk;
        }
    } catch (const denum::invalid_input& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInvalid;
    } catch (const denum::resource_limit& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitInvalid;
    } catch (const denum::internal_error& e) {
        std::cerr << "internal error: " << e.what() << std::endl;
        return kExitInternal;
    }
    return kExitInvalid;
}
