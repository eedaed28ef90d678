#pragma once

#include <optional>
#include <vector>

#include "denum/ct.hpp"
#include "denum/eval.hpp"

namespace denum {

/// (n; a, b, c) after canonicalization by normalize: a < b < c and
/// gcd(a, b, c) = 1. Later reductions may lower a to 1 but keep the
/// strict order.
struct ProblemInstance {
    Integer n, a, b, c;

    friend bool operator==(const ProblemInstance& x, const ProblemInstance& y) {
        return x.n == y.n && x.a == y.a && x.b == y.b && x.c == y.c;
    }
};

/// Metadata of one gcd reduction: the gcd g divided out, the modular
/// inverse used, the shift in [0, g), and the reduced n.
struct GcdReductionStep {
    Integer g;
    Integer inverse;
    Integer shift;
    Integer new_n;
};

/// The two-contribution split: shift multiple s with 0 < s*c - n <= c,
/// and the raw T(a), T(b) contributions sharing the numerator
/// lambda^{-n} - lambda^{s c - n} z3^s.
struct ContributionSplit {
    Integer s;
    RawContribution ta, tb;
};

/// Sorts (a, b, c), divides a common gcd g > 1 out of all four values
/// (empty result when g does not divide n, i.e. the count is zero), and
/// rejects non-distinct values. `scaled_by`, when given, receives g.
/// Throws invalid_input for n < 0 or any value < 1.
std::optional<ProblemInstance> normalize(const Integer& n, const Integer& a,
                                         const Integer& b, const Integer& c,
                                         Integer* scaled_by = nullptr);

/// Divides g3 = gcd(a, b) out: with c3*c == 1 (mod g3) and
/// i == n*c3 (mod g3), 0 <= i < g3, the instance becomes
/// ((n - i*c)/g3; a/g3, b/g3, c). Empty result when the new n is
/// negative (count zero). Requires gcd(a, b, c) = 1.
std::optional<ProblemInstance> reduce_gcd_ab(const ProblemInstance& inst,
                                             GcdReductionStep* step = nullptr);

/// Full three-step chain (g3, then gcd(a,c), then gcd(b,c)) producing a
/// pairwise-coprime instance with equal count; empty on a negative
/// intermediate n. Diagnostics only; the main pipeline uses just
/// reduce_gcd_ab.
std::optional<ProblemInstance> reduce_pairwise(const ProblemInstance& inst);

/// Smallest s with 0 < s*c - n <= c, i.e. floor(n/c) + 1.
Integer choose_s(const Integer& n, const Integer& c);

/// Builds T(a) (underline a, to-unit b, third c) and T(b) (underline b,
/// to-unit a, third c). Requires gcd(a, b) = 1.
ContributionSplit split_contributions(const ProblemInstance& inst);

struct ComputeOptions {
    std::optional<MuVector> mu; // forced direction; validated against the terms
    unsigned long seed = 0;     // seeds the random fallback of choose_mu
    TraceSink* trace = nullptr;
};

/// Everything produced along the way by one denumerant computation.
struct Computation {
    bool zero = false;        // short-circuited to count 0
    ProblemInstance normalized{};
    Integer scaled_by = 1;    // gcd divided out by normalize
    GcdReductionStep g3{};
    ProblemInstance reduced{}; // what the contributions are built from
    Integer s = 0;
    std::vector<RationalTerm> terms; // T(a) terms first, then T(b) terms
    std::size_t ta_terms = 0;
    unsigned long steps_a = 0, steps_b = 0;
    MuVector mu{};
    std::vector<Rational> term_values;
    Integer count = 0;
};

/// Full pipeline: normalize, gcd reduction, contribution split, unit
/// transformation, Euclid recursion, mu selection and exact evaluation.
Computation compute(const Integer& n, const Integer& a, const Integer& b,
                    const Integer& c, const ComputeOptions& options = {});

/// The number of solutions of a*x1 + b*x2 + c*x3 = n in non-negative
/// integers, computed in O(log b) ring operations.
Integer denumerant(const Integer& n, const Integer& a, const Integer& b,
                   const Integer& c);

inline const Integer kOracleDefaultLimit = Integer(10000000);

/// Independent dynamic-programming coin count; exact. Guarded by `limit`
/// on n (and a hard cap keeping the 64-bit table provably overflow-free).
Integer oracle_count(const Integer& n, const Integer& a, const Integer& b,
                     const Integer& c, const Integer& limit = kOracleDefaultLimit);

/// Two-variable denumerant via the Popoviciu closed form, in exact
/// rationals. Requires gcd(p, q) = 1.
Integer denumerant2(const Integer& n, const Integer& p, const Integer& q);

} // namespace denum
