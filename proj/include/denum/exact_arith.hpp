#pragma once

#include <gmpxx.h>

#include <string>

#include "denum/errors.hpp"

namespace denum {

// All arithmetic in this project is exact. Integers are arbitrary-precision
// GMP integers; rationals are GMP rationals kept in canonical form
// (lowest terms, positive denominator).
using Integer = mpz_class;
using Rational = mpq_class;

/// Reduced rational num/den. Throws internal_error on a zero denominator.
Rational make_rational(const Integer& num, const Integer& den);

Integer gcd(const Integer& a, const Integer& b);

/// Floor-convention remainder in [0, m), m >= 1.
Integer mod_floor(const Integer& x, const Integer& m);

/// Quotient of an exact division; a nonzero remainder is an internal error,
/// never a silent truncation.
Integer exact_div(const Integer& num, const Integer& den);

/// floor(log2(x)) for x >= 1.
unsigned long floor_log2(const Integer& x);

bool is_integer(const Rational& q);

std::string to_string(const Integer& x);
std::string to_string(const Rational& q); // "p" or "p/q"
Rational rational_from_string(const std::string& s);

struct ExtGcd {
    Integer g; // gcd(a, b) > 0
    Integer x; // a*x + b*y == g
    Integer y;
};

/// Extended Euclidean algorithm. Rejects (0, 0).
ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// The unique y with x*y == 1 (mod m) and -m/2 < y <= m/2, for m >= 1.
/// For m == 1 the result is 1 by convention. Requires gcd(x, m) == 1.
Integer mod_inverse_signed(const Integer& x, const Integer& m);

/// Bezout pair for coprime a, b >= 1 with the canonical choice
/// v = mod_inverse_signed(b, a), u = (1 - b*v)/a, so that a*u + b*v == 1,
/// v != 0 and gcd(a, v) == 1.
struct BezoutPair {
    Integer u;
    Integer v;
    Integer a;
    Integer b;
};

BezoutPair bezout_unit(const Integer& a, const Integer& b);

struct QuotRem {
    Integer quot;
    Integer rem; // m == quot * modulus + rem
};

/// Signed remainder: m = quot*a + rem with -a/2 < rem <= a/2, a >= 1.
QuotRem srem_star(const Integer& m, const Integer& a);

/// Shifted remainder: m = quot*a + rem with 0 < rem <= a, a >= 1.
QuotRem rem_star(const Integer& m, const Integer& a);

/// The three slack-variable axes.
enum class Slack { z1 = 0, z2 = 1, z3 = 2 };

/// Exact-rational exponent vector over the slack variables (z1, z2, z3).
/// The zero vector represents the monomial 1.
struct ExpVec {
    Rational e1, e2, e3;

    bool is_zero() const { return e1 == 0 && e2 == 0 && e3 == 0; }

    ExpVec& operator+=(const ExpVec& o);
    ExpVec& operator-=(const ExpVec& o);
    ExpVec operator-() const;

    friend ExpVec operator+(ExpVec a, const ExpVec& b) { return a += b; }
    friend ExpVec operator-(ExpVec a, const ExpVec& b) { return a -= b; }
    friend bool operator==(const ExpVec& a, const ExpVec& b) {
        return a.e1 == b.e1 && a.e2 == b.e2 && a.e3 == b.e3;
    }
    friend bool operator!=(const ExpVec& a, const ExpVec& b) { return !(a == b); }
};

ExpVec operator*(const Integer& k, const ExpVec& v);
ExpVec operator*(const Rational& k, const ExpVec& v);

/// Unit vector of one slack axis.
ExpVec basis(Slack axis);

std::string to_string(const ExpVec& v); // "e1,e2,e3"
ExpVec expvec_from_string(const std::string& s);

} // namespace denum
