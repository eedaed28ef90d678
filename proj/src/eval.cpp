#include "denum/eval.hpp"

#include "denum/rng.hpp"

namespace denum {

Rational dot(const ExpVec& v, const MuVector& mu) {
    return v.e1 * Rational(mu.mu1) + v.e2 * Rational(mu.mu2) + v.e3 * Rational(mu.mu3);
}

bool mu_valid(std::span<const RationalTerm> terms, const MuVector& mu) {
    for (const RationalTerm& t : terms)
        if (dot(t.omega, mu) == 0 || dot(t.theta, mu) == 0)
            return false;
    return true;
}

MuVector choose_mu(std::span<const RationalTerm> terms, unsigned long seed) {
    static const MuVector kFixed[] = {
        {0, 1, 1}, {1, 1, 0}, {1, 0, 1}, {1, 2, 3}, {1, 3, 9}, {2, 3, 5},
    };
    for (const MuVector& mu : kFixed)
        if (mu_valid(terms, mu))
            return mu;

    std::mt19937_64 rng(seed);
    std::int64_t bound = 8;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        if (attempt > 0 && attempt % 16 == 0 && bound < (std::int64_t(1) << 40))
            bound *= 2;
        MuVector mu{Integer(uniform_in(rng, -bound, bound)),
                    Integer(uniform_in(rng, -bound, bound)),
                    Integer(uniform_in(rng, -bound, bound))};
        if (mu_valid(terms, mu))
            return mu;
    }
    throw internal_error("choose_mu: retry cap reached without a valid direction");
}

HQuad h_quad(const RationalTerm& term, const MuVector& mu) {
    return HQuad{dot(term.omega, mu), dot(term.theta, mu), dot(term.m1, mu),
                 dot(term.m2, mu)};
}

Rational eval_from_h(const HQuad& h) {
    if (h.h1 == 0 || h.h2 == 0)
        throw internal_error("eval_term: mu direction hits a denominator");
    return (h.h4 - h.h3) * (h.h1 + h.h2 - h.h3 - h.h4) / (2 * h.h1 * h.h2);
}

Rational eval_term(const RationalTerm& term, const MuVector& mu) {
    return eval_from_h(h_quad(term, mu));
}

Rational eval_sum_rational(std::span<const RationalTerm> terms, const MuVector& mu) {
    Rational total = 0;
    for (const RationalTerm& t : terms)
        total += eval_term(t, mu);
    return total;
}

Integer eval_sum(std::span<const RationalTerm> terms, const MuVector& mu) {
    const Rational total = eval_sum_rational(terms, mu);
    if (!is_integer(total) || total < 0)
        throw internal_error("eval_sum: total " + to_string(total) +
                             " is not a non-negative integer");
    return total.get_num();
}

} // namespace denum
