#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "denum/pipeline.hpp"

namespace denum {

struct BenchOptions {
    unsigned bits = 40;        // bit length of b
    std::size_t samples = 100;
    std::uint64_t seed = 0;
    bool verify_small = true;  // oracle-check every sample when bits <= 12
    std::function<void(const Computation&)> on_sample; // optional inspection hook
};

struct BenchReport {
    std::size_t samples = 0;
    unsigned bits = 0;
    std::int64_t median_us = 0;
    std::int64_t p95_us = 0;
    unsigned long max_steps = 0;       // per-contribution euclid steps observed
    unsigned long max_step_bound = 0;  // largest floor(log2 index)+1 over samples
    unsigned long max_terms = 0;       // emitted terms per instance observed
    unsigned long max_term_bound = 0;  // largest floor(log2 a)+floor(log2 b)+2
    bool bounds_ok = true;
    std::size_t verified = 0;          // oracle cross-checks run
    std::size_t mismatches = 0;
};

/// Samples random instances (b of the requested bit length, a < b coprime
/// to it, c > b), times the full computation and checks the recursion-step
/// and term-count bounds on every sample.
BenchReport run_bench(const BenchOptions& options);

std::string format_report(const BenchReport& report);

} // namespace denum
