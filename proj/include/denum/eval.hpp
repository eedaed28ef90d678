#pragma once

#include <span>

#include "denum/ct.hpp"

namespace denum {

/// Integer direction used to dispel the slack variables; valid for a term
/// list when no term denominator pairs to zero against it.
struct MuVector {
    Integer mu1, mu2, mu3;

    friend bool operator==(const MuVector& a, const MuVector& b) {
        return a.mu1 == b.mu1 && a.mu2 == b.mu2 && a.mu3 == b.mu3;
    }
};

Rational dot(const ExpVec& v, const MuVector& mu);

/// <omega,mu>, <theta,mu>, <m1,mu>, <m2,mu>
struct HQuad {
    Rational h1, h2, h3, h4;
};

bool mu_valid(std::span<const RationalTerm> terms, const MuVector& mu);

/// Deterministic-first mu selection: a fixed candidate list, then seeded
/// uniform candidates in [-B,B]^3 with B doubling from 8. At most 1000
/// random attempts before giving up with an internal error (unreachable
/// when the term invariants hold).
MuVector choose_mu(std::span<const RationalTerm> terms, unsigned long seed);

HQuad h_quad(const RationalTerm& term, const MuVector& mu);

/// The one-variable constant term in closed form:
/// (h4 - h3)(h1 + h2 - h3 - h4) / (2 h1 h2). Requires h1, h2 != 0.
Rational eval_from_h(const HQuad& h);

Rational eval_term(const RationalTerm& term, const MuVector& mu);

/// Exact rational sum of eval_term over all terms.
Rational eval_sum_rational(std::span<const RationalTerm> terms, const MuVector& mu);

/// As eval_sum_rational, but asserts the result is an integer >= 0 and
/// returns it. A fractional or negative sum signals an upstream bug.
Integer eval_sum(std::span<const RationalTerm> terms, const MuVector& mu);

} // namespace denum
