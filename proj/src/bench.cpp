#include "denum/bench.hpp"

#include <algorithm>
#include <chrono>
#include <vector>

#include "denum/rng.hpp"

namespace denum {

namespace {

Integer random_bits(std::mt19937_64& rng, unsigned bits) {
    // Uniform in [2^(bits-1), 2^bits).
    const std::uint64_t lo = std::uint64_t(1) << (bits - 1);
    return Integer(static_cast<unsigned long>(lo + uniform_below(rng, lo)));
}

} // namespace

BenchReport run_bench(const BenchOptions& options) {
    if (options.bits < 2 || options.bits > 62)
        throw invalid_input("bench: bits must be in [2, 62]");
    BenchReport rep;
    rep.samples = options.samples;
    rep.bits = options.bits;
    if (options.samples == 0)
        return rep;

    std::mt19937_64 rng(options.seed);
    std::vector<std::int64_t> latencies;
    latencies.reserve(options.samples);
    const bool verify = options.verify_small && options.bits <= 12;

    for (std::size_t i = 0; i < options.samples; ++i) {
        const Integer b = random_bits(rng, options.bits);
        Integer a;
        do {
            a = Integer(static_cast<unsigned long>(
                1 + uniform_below(rng, b.get_ui() - 1)));
        } while (gcd(a, b) != 1);
        const Integer c = b + 1 + Integer(static_cast<unsigned long>(
                                      uniform_below(rng, b.get_ui())));
        Integer n;
        if (verify) {
            n = Integer(static_cast<unsigned long>(uniform_below(rng, 50000)));
        } else {
            n = c * Integer(static_cast<unsigned long>(uniform_below(rng, c.get_ui()))) +
                Integer(static_cast<unsigned long>(uniform_below(rng, c.get_ui())));
        }

        const auto start = std::chrono::steady_clock::now();
        const Computation comp = compute(n, a, b, c);
        const auto stop = std::chrono::steady_clock::now();
        latencies.push_back(
            std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());

        if (!comp.zero) {
            const unsigned long bound_a = floor_log2(comp.reduced.a) + 1;
            const unsigned long bound_b = floor_log2(comp.reduced.b) + 1;
            const unsigned long term_bound = bound_a + bound_b;
            rep.max_steps = std::max({rep.max_steps, comp.steps_a, comp.steps_b});
            rep.max_step_bound = std::max({rep.max_step_bound, bound_a, bound_b});
            rep.max_terms = std::max(rep.max_terms,
                                     static_cast<unsigned long>(comp.terms.size()));
            rep.max_term_bound = std::max(rep.max_term_bound, term_bound);
            if (comp.steps_a > bound_a || comp.steps_b > bound_b ||
                comp.terms.size() > term_bound)
                rep.bounds_ok = false;
        }
        if (verify) {
            rep.verified += 1;
            if (oracle_count(n, a, b, c) != comp.count)
                rep.mismatches += 1;
        }
        if (options.on_sample)
            options.on_sample(comp);
    }

    std::sort(latencies.begin(), latencies.end());
    rep.median_us = latencies[latencies.size() / 2];
    const std::size_t p95 = (latencies.size() * 95 + 99) / 100;
    rep.p95_us = latencies[p95 == 0 ? 0 : p95 - 1];
    return rep;
}

std::string format_report(const BenchReport& rep) {
    std::string out;
    out += "samples=" + std::to_string(rep.samples);
    out += " bits=" + std::to_string(rep.bits);
    if (rep.samples > 0) {
        out += " median_us=" + std::to_string(rep.median_us);
        out += " p95_us=" + std::to_string(rep.p95_us);
        out += " max_steps=" + std::to_string(rep.max_steps);
        out += " step_bound=" + std::to_string(rep.max_step_bound);
        out += " max_terms=" + std::to_string(rep.max_terms);
        out += " term_bound=" + std::to_string(rep.max_term_bound);
        out += " bounds_ok=" + std::string(rep.bounds_ok ? "1" : "0");
        out += " verified=" + std::to_string(rep.verified);
        out += " mismatches=" + std::to_string(rep.mismatches);
    }
    return out;
}

} // namespace denum
