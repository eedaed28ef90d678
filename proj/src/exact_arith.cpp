#include "denum/exact_arith.hpp"

namespace denum {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw internal_error("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer mod_floor(const Integer& x, const Integer& m) {
    if (m < 1)
        throw internal_error("mod_floor: modulus must be positive");
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer exact_div(const Integer& num, const Integer& den) {
    if (den == 0)
        throw internal_error("exact_div: zero divisor");
    Integer q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0)
        throw internal_error("exact_div: " + to_string(num) + " is not divisible by " +
                             to_string(den));
    return q;
}

unsigned long floor_log2(const Integer& x) {
    if (x < 1)
        throw internal_error("floor_log2: argument must be positive");
    return static_cast<unsigned long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

std::string to_string(const Integer& x) {
    return x.get_str();
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_from_string(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw invalid_input("not a rational: '" + s + "'");
    if (q.get_den() <= 0)
        throw invalid_input("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0)
        throw invalid_input("ext_gcd: gcd(0, 0) is undefined");
    ExtGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return r;
}

Integer mod_inverse_signed(const Integer& x, const Integer& m) {
    if (m < 1)
        throw invalid_input("mod_inverse_signed: modulus must be positive");
    if (m == 1)
        return 1;
    Integer y;
    if (mpz_invert(y.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
        throw invalid_input("mod_inverse_signed: " + to_string(x) +
                            " is not invertible modulo " + to_string(m));
    if (2 * y > m)
        y -= m;
    return y;
}

BezoutPair bezout_unit(const Integer& a, const Integer& b) {
    if (a < 1 || b < 1)
        throw invalid_input("bezout_unit: arguments must be positive");
    BezoutPair p;
    p.a = a;
    p.b = b;
    p.v = mod_inverse_signed(b, a); // throws when gcd(a, b) != 1
    p.u = exact_div(1 - b * p.v, a);
    return p;
}

QuotRem srem_star(const Integer& m, const Integer& a) {
    if (a < 1)
        throw invalid_input("srem_star: modulus must be positive");
    QuotRem qr;
    mpz_fdiv_qr(qr.quot.get_mpz_t(), qr.rem.get_mpz_t(), m.get_mpz_t(), a.get_mpz_t());
    if (2 * qr.rem > a) {
        qr.rem -= a;
        qr.quot += 1;
    }
    return qr;
}

QuotRem rem_star(const Integer& m, const Integer& a) {
    if (a < 1)
        throw invalid_input("rem_star: modulus must be positive");
    QuotRem qr;
    mpz_fdiv_qr(qr.quot.get_mpz_t(), qr.rem.get_mpz_t(), m.get_mpz_t(), a.get_mpz_t());
    if (qr.rem == 0) {
        qr.rem = a;
        qr.quot -= 1;
    }
    return qr;
}

ExpVec& ExpVec::operator+=(const ExpVec& o) {
    e1 += o.e1;
    e2 += o.e2;
    e3 += o.e3;
    return *this;
}

ExpVec& ExpVec::operator-=(const ExpVec& o) {
    e1 -= o.e1;
    e2 -= o.e2;
    e3 -= o.e3;
    return *this;
}

ExpVec ExpVec::operator-() const {
    return ExpVec{-e1, -e2, -e3};
}

ExpVec operator*(const Integer& k, const ExpVec& v) {
    return ExpVec{Rational(k) * v.e1, Rational(k) * v.e2, Rational(k) * v.e3};
}

ExpVec operator*(const Rational& k, const ExpVec& v) {
    return ExpVec{k * v.e1, k * v.e2, k * v.e3};
}

ExpVec basis(Slack axis) {
    switch (axis) {
    case Slack::z1: return ExpVec{1, 0, 0};
    case Slack::z2: return ExpVec{0, 1, 0};
    case Slack::z3: return ExpVec{0, 0, 1};
    }
    throw internal_error("basis: bad slack axis");
}

std::string to_string(const ExpVec& v) {
    return to_string(v.e1) + "," + to_string(v.e2) + "," + to_string(v.e3);
}

ExpVec expvec_from_string(const std::string& s) {
    const auto first = s.find(',');
    const auto second = s.find(',', first == std::string::npos ? first : first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw invalid_input("not an exponent triple: '" + s + "'");
    return ExpVec{rational_from_string(s.substr(0, first)),
                  rational_from_string(s.substr(first + 1, second - first - 1)),
                  rational_from_string(s.substr(second + 1))};
}

} // namespace denum
