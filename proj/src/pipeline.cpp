#include "denum/pipeline.hpp"

#include <utility>
#include <vector>

namespace denum {

std::optional<ProblemInstance> normalize(const Integer& n, const Integer& a,
                                         const Integer& b, const Integer& c,
                                         Integer* scaled_by) {
    if (n < 0)
        throw invalid_input("normalize: n must be non-negative");
    if (a < 1 || b < 1 || c < 1)
        throw invalid_input("normalize: a, b, c must be positive");

    Integer x = a, y = b, z = c;
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);

    const Integer g = gcd(gcd(x, y), z);
    if (scaled_by)
        *scaled_by = g;
    Integer nn = n;
    if (g > 1) {
        if (mod_floor(nn, g) != 0)
            return std::nullopt;
        nn = exact_div(nn, g);
        x = exact_div(x, g);
        y = exact_div(y, g);
        z = exact_div(z, g);
    }
    if (x == y || y == z)
        throw invalid_input("normalize: a, b, c must be distinct after removing the "
                            "common gcd; for two distinct values use denumerant2");
    return ProblemInstance{nn, x, y, z};
}

std::optional<ProblemInstance> reduce_gcd_ab(const ProblemInstance& inst,
                                             GcdReductionStep* step) {
    const Integer g3 = gcd(inst.a, inst.b);
    // gcd(a, b, c) = 1 makes c invertible modulo g3.
    const Integer c3 = mod_inverse_signed(inst.c, g3);
    const Integer i = mod_floor(inst.n * c3, g3);
    const Integer new_n = exact_div(inst.n - i * inst.c, g3);
    if (step)
        *step = GcdReductionStep{g3, c3, i, new_n};
    if (new_n < 0)
        return std::nullopt;
    return ProblemInstance{new_n, exact_div(inst.a, g3), exact_div(inst.b, g3), inst.c};
}

std::optional<ProblemInstance> reduce_pairwise(const ProblemInstance& inst) {
    Integer n = inst.n, a = inst.a, b = inst.b, c = inst.c;
    const auto divide_out = [&n](Integer& x, Integer& y, const Integer& comp) {
        const Integer g = gcd(x, y);
        const Integer inv = mod_inverse_signed(comp, g);
        const Integer shift = mod_floor(n * inv, g);
        const Integer num = n - shift * comp;
        if (num < 0)
            return false;
        n = exact_div(num, g);
        x = exact_div(x, g);
        y = exact_div(y, g);
        return true;
    };
    if (!divide_out(a, b, c)) return std::nullopt;
    if (!divide_out(a, c, b)) return std::nullopt;
    if (!divide_out(b, c, a)) return std::nullopt;
    return ProblemInstance{n, a, b, c};
}

Integer choose_s(const Integer& n, const Integer& c) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
    return q + 1;
}

ContributionSplit split_contributions(const ProblemInstance& inst) {
    if (gcd(inst.a, inst.b) != 1)
        throw internal_error("split_contributions: gcd(a, b) != 1 after reduction");
    ContributionSplit cs;
    cs.s = choose_s(inst.n, inst.c);
    const LaurentMonomial num1{-inst.n, ExpVec{}};
    const LaurentMonomial num2{cs.s * inst.c - inst.n, cs.s * basis(Slack::z3)};
    cs.ta = RawContribution{inst.a, Slack::z1, inst.b, Slack::z2,
                            inst.c, Slack::z3, num1,  num2};
    cs.tb = RawContribution{inst.b, Slack::z2, inst.a, Slack::z1,
                            inst.c, Slack::z3, num1,  num2};
    return cs;
}

namespace {

void emit(TraceSink* sink, TraceRecord rec) {
    if (sink)
        (*sink)(rec);
}

void trace_unit_transform(TraceSink* sink, const char* label,
                          const RawContribution& contrib, const CTState& s) {
    if (!sink)
        return;
    const BezoutPair bez = bezout_unit(contrib.underline_index, contrib.to_unit_index);
    TraceRecord rec{Stage::unit_transform, {}};
    rec.add("side", label);
    rec.add("u", to_string(bez.u));
    rec.add("v", to_string(bez.v));
    rec.add("index", to_string(s.underline.lam));
    rec.add("alpha", to_string(s.underline.z));
    rec.add("gamma", to_string(s.unit.z));
    rec.add("third_lam", to_string(s.third.lam));
    rec.add("beta", to_string(s.third.z));
    rec.add("r1", to_string(s.num1.lam));
    rec.add("m1", to_string(s.num1.z));
    rec.add("r2", to_string(s.num2.lam));
    rec.add("m2", to_string(s.num2.z));
    (*sink)(rec);
}

Computation finish_zero(Computation comp, TraceSink* sink) {
    comp.zero = true;
    comp.count = 0;
    TraceRecord rec{Stage::sum, {}};
    rec.add("value", "0");
    rec.add("count", "0");
    emit(sink, rec);
    return comp;
}

} // namespace

Computation compute(const Integer& n, const Integer& a, const Integer& b,
                    const Integer& c, const ComputeOptions& options) {
    TraceSink* sink = options.trace;
    Computation comp;

    std::optional<ProblemInstance> norm = normalize(n, a, b, c, &comp.scaled_by);
    {
        TraceRecord rec{Stage::normalize, {}};
        rec.add("g", to_string(comp.scaled_by));
        rec.add("zero", norm ? "0" : "1");
        if (norm) {
            rec.add("n", to_string(norm->n));
            rec.add("a", to_string(norm->a));
            rec.add("b", to_string(norm->b));
            rec.add("c", to_string(norm->c));
        }
        emit(sink, rec);
    }
    if (!norm)
        return finish_zero(std::move(comp), sink);
    comp.normalized = *norm;

    std::optional<ProblemInstance> reduced = reduce_gcd_ab(*norm, &comp.g3);
    {
        TraceRecord rec{Stage::gcd_reduce, {}};
        rec.add("g3", to_string(comp.g3.g));
        rec.add("inverse", to_string(comp.g3.inverse));
        rec.add("shift", to_string(comp.g3.shift));
        rec.add("n", to_string(comp.g3.new_n));
        rec.add("zero", reduced ? "0" : "1");
        if (reduced) {
            rec.add("a", to_string(reduced->a));
            rec.add("b", to_string(reduced->b));
            rec.add("c", to_string(reduced->c));
        }
        emit(sink, rec);
    }
    if (!reduced)
        return finish_zero(std::move(comp), sink);
    comp.reduced = *reduced;

    const ContributionSplit split = split_contributions(*reduced);
    comp.s = split.s;
    {
        TraceRecord rec{Stage::split, {}};
        rec.add("s", to_string(split.s));
        rec.add("r1", to_string(split.ta.num1.lam));
        rec.add("r2", to_string(split.ta.num2.lam));
        rec.add("m2", to_string(split.ta.num2.z));
        emit(sink, rec);
    }

    const CTState state_a = to_unit_state(split.ta);
    trace_unit_transform(sink, "a", split.ta, state_a);
    const CTState state_b = to_unit_state(split.tb);
    trace_unit_transform(sink, "b", split.tb, state_b);

    Reduction ra = reduce_contribution(state_a, sink, "a");
    Reduction rb = reduce_contribution(state_b, sink, "b");
    comp.steps_a = ra.steps;
    comp.steps_b = rb.steps;
    comp.ta_terms = ra.terms.size();
    comp.terms = std::move(ra.terms);
    comp.terms.insert(comp.terms.end(), rb.terms.begin(), rb.terms.end());

    const unsigned long term_bound =
        floor_log2(reduced->a) + floor_log2(reduced->b) + 2;
    if (comp.terms.size() > term_bound)
        throw internal_error("compute: term count exceeds the log bound");

    if (options.mu) {
        if (!mu_valid(comp.terms, *options.mu))
            throw invalid_input("compute: the requested mu direction hits a zero "
                                "denominator on this instance");
        comp.mu = *options.mu;
    } else {
        comp.mu = choose_mu(comp.terms, options.seed);
    }
    {
        TraceRecord rec{Stage::mu_select, {}};
        rec.add("mu", to_string(comp.mu.mu1) + "," + to_string(comp.mu.mu2) + "," +
                          to_string(comp.mu.mu3));
        rec.add("forced", options.mu ? "1" : "0");
        emit(sink, rec);
    }

    Rational total = 0;
    comp.term_values.reserve(comp.terms.size());
    for (std::size_t i = 0; i < comp.terms.size(); ++i) {
        const HQuad h = h_quad(comp.terms[i], comp.mu);
        const Rational value = eval_from_h(h);
        if (sink) {
            TraceRecord rec{Stage::eval_term, {}};
            rec.add("idx", std::to_string(i));
            rec.add("h1", to_string(h.h1));
            rec.add("h2", to_string(h.h2));
            rec.add("h3", to_string(h.h3));
            rec.add("h4", to_string(h.h4));
            rec.add("value", to_string(value));
            (*sink)(rec);
        }
        total += value;
        comp.term_values.push_back(value);
    }
    if (!is_integer(total) || total < 0)
        throw internal_error("compute: final sum " + to_string(total) +
                             " is not a non-negative integer");
    comp.count = total.get_num();
    {
        TraceRecord rec{Stage::sum, {}};
        rec.add("value", to_string(total));
        rec.add("count", to_string(comp.count));
        emit(sink, rec);
    }
    return comp;
}

Integer denumerant(const Integer& n, const Integer& a, const Integer& b,
                   const Integer& c) {
    return compute(n, a, b, c).count;
}

Integer oracle_count(const Integer& n, const Integer& a, const Integer& b,
                     const Integer& c, const Integer& limit) {
    if (n < 0)
        throw invalid_input("oracle_count: n must be non-negative");
    if (a < 1 || b < 1 || c < 1)
        throw invalid_input("oracle_count: a, b, c must be positive");
    if (n > limit)
        throw resource_limit("oracle_count: n exceeds the DP guard (" +
                             to_string(limit) + ")");
    // Counts are bounded by (n+1)(n+2)/2, so a 64-bit table is exact for
    // any n below 3e9; refuse anything larger regardless of the guard.
    static const Integer kHardCap("3000000000");
    if (n > kHardCap)
        throw resource_limit("oracle_count: n exceeds the 64-bit table cap");

    const std::size_t size = static_cast<std::size_t>(n.get_ui()) + 1;
    std::vector<std::uint64_t> ways(size, 0);
    ways[0] = 1;
    for (const Integer& coin : {a, b, c}) {
        if (coin > n)
            continue;
        const std::size_t k = static_cast<std::size_t>(coin.get_ui());
        for (std::size_t i = k; i < size; ++i)
            ways[i] += ways[i - k];
    }
    Integer result;
    mpz_import(result.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0, &ways[size - 1]);
    return result;
}

Integer denumerant2(const Integer& n, const Integer& p, const Integer& q) {
    if (n < 0)
        throw invalid_input("denumerant2: n must be non-negative");
    if (p < 1 || q < 1)
        throw invalid_input("denumerant2: p, q must be positive");
    if (gcd(p, q) != 1)
        throw invalid_input("denumerant2: p and q must be coprime");
    const Integer qi = mod_inverse_signed(q, p);
    const Integer pi = mod_inverse_signed(p, q);
    const Integer rp = mod_floor(qi * n, p);
    const Integer rq = mod_floor(pi * n, q);
    const Rational d =
        make_rational(n, p * q) - make_rational(rp, p) - make_rational(rq, q) + 1;
    if (!is_integer(d) || d < 0)
        throw internal_error("denumerant2: closed form gave " + to_string(d));
    return d.get_num();
}

} // namespace denum
