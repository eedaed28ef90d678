#include "denum/ct.hpp"

namespace denum {

void check_state(const CTState& s) {
    if (s.unit.lam != 1)
        throw internal_error("ct state: middle factor must carry lambda-exponent 1");
    if (s.underline.lam < 0)
        throw internal_error("ct state: underline index must be non-negative");
    if (s.underline.z.is_zero() || s.unit.z.is_zero() || s.third.z.is_zero())
        throw internal_error("ct state: factor with empty slack support");
}

CTState to_unit_state(const RawContribution& contrib) {
    if (contrib.underline_index < 1 || contrib.to_unit_index < 1)
        throw invalid_input("to_unit_state: factor indices must be positive");
    // bezout_unit rejects non-coprime indices; that means an upstream
    // reduction failed to establish gcd(a, b) = 1.
    const BezoutPair bez = bezout_unit(contrib.underline_index, contrib.to_unit_index);
    const Rational inv_v = make_rational(1, bez.v);
    const Rational u_over_v = make_rational(bez.u, bez.v);

    CTState s;
    s.underline = Factor{contrib.underline_index, inv_v * basis(contrib.underline_axis)};
    s.unit = Factor{1, basis(contrib.to_unit_axis) + u_over_v * basis(contrib.underline_axis)};
    s.third = Factor{contrib.third_index * bez.v, basis(contrib.third_axis)};
    s.num1 = LaurentMonomial{contrib.num1.lam * bez.v, contrib.num1.z};
    s.num2 = LaurentMonomial{contrib.num2.lam * bez.v, contrib.num2.z};
    check_state(s);
    return s;
}

EuclidStepResult euclid_step(const CTState& s) {
    if (s.underline.lam < 2)
        throw internal_error("euclid_step: index below 2, use base_case");
    const Integer& a = s.underline.lam;
    const ExpVec& alpha = s.underline.z;
    const ExpVec& gamma = s.unit.z;

    // Fold the third factor's lambda-exponent into (-a/2, a/2].
    const QuotRem sr = srem_star(s.third.lam, a);
    const Integer& c1 = sr.rem;
    const ExpVec beta1 = s.third.z - sr.quot * alpha;

    Integer c2;
    ExpVec beta2;
    Integer t1, t2;
    ExpVec m1p, m2p;
    if (c1 >= 0) {
        c2 = c1;
        beta2 = beta1;
        const QuotRem r1 = rem_star(s.num1.lam, a);
        t1 = r1.rem;
        m1p = s.num1.z - r1.quot * alpha;
        const QuotRem r2 = rem_star(s.num2.lam, a);
        t2 = r2.rem;
        m2p = s.num2.z - r2.quot * alpha;
    } else {
        // Negative remainder: invert the folded factor, which negates the
        // numerator and cross-multiplies it by lambda^{-c1} z^{-beta1}.
        c2 = -c1;
        beta2 = -beta1;
        const QuotRem r1 = rem_star(s.num2.lam - c1, a);
        t1 = r1.rem;
        m1p = s.num2.z - beta1 - r1.quot * alpha;
        const QuotRem r2 = rem_star(s.num1.lam - c1, a);
        t2 = r2.rem;
        m2p = s.num1.z - beta1 - r2.quot * alpha;
    }

    EuclidStepResult out;
    out.emitted = RationalTerm{
        m2p - t2 * gamma,
        m1p - t1 * gamma,
        alpha - a * gamma,
        beta2 - c2 * gamma,
    };
    // Underline and third swap roles; the numerator order swaps with them.
    out.next = CTState{
        Factor{c2, beta2},
        s.unit,
        Factor{a, alpha},
        LaurentMonomial{t2, m2p},
        LaurentMonomial{t1, m1p},
    };

    if (out.emitted.omega.is_zero() || out.emitted.theta.is_zero())
        throw internal_error("euclid_step: emitted a vanishing denominator");
    if (2 * c2 > a)
        throw internal_error("euclid_step: index did not halve");
    check_state(out.next);
    return out;
}

std::optional<RationalTerm> base_case(const CTState& s) {
    if (s.underline.lam > 1)
        throw internal_error("base_case: index above 1, use euclid_step");
    if (s.underline.lam == 0)
        return std::nullopt;
    const ExpVec& alpha = s.underline.z;
    RationalTerm t{
        s.num1.z - s.num1.lam * alpha,
        s.num2.z - s.num2.lam * alpha,
        s.unit.z - alpha,
        s.third.z - s.third.lam * alpha,
    };
    if (t.omega.is_zero() || t.theta.is_zero())
        throw internal_error("base_case: emitted a vanishing denominator");
    return t;
}

namespace {

// Emitted denominators must keep slack support outside z1 so the limit
// z -> 1 never meets an identically-zero factor.
void require_slack_support(const RationalTerm& t) {
    if (t.omega.e2 == 0 && t.omega.e3 == 0)
        throw internal_error("emitted term: omega supported on z1 only");
    if (t.theta.e2 == 0 && t.theta.e3 == 0)
        throw internal_error("emitted term: theta supported on z1 only");
}

void trace_term(TraceSink* sink, Stage stage, const char* label,
                unsigned long step, const RationalTerm& t, const CTState& state) {
    if (!sink)
        return;
    TraceRecord rec{stage, {}};
    rec.add("side", label);
    rec.add("step", std::to_string(step));
    rec.add("index", to_string(state.underline.lam));
    rec.add("m1", to_string(t.m1));
    rec.add("m2", to_string(t.m2));
    rec.add("omega", to_string(t.omega));
    rec.add("theta", to_string(t.theta));
    (*sink)(rec);
}

} // namespace

Reduction reduce_contribution(CTState state, TraceSink* sink, const char* label) {
    check_state(state);
    Reduction red;
    const Integer initial = state.underline.lam;
    const unsigned long step_bound = initial >= 1 ? floor_log2(initial) + 1 : 1;

    while (state.underline.lam >= 2) {
        EuclidStepResult step = euclid_step(state);
        if (2 * step.next.underline.lam > state.underline.lam)
            throw internal_error("reduce_contribution: index did not halve");
        require_slack_support(step.emitted);
        red.steps += 1;
        if (red.steps > step_bound)
            throw internal_error("reduce_contribution: step bound exceeded");
        trace_term(sink, Stage::euclid_step, label, red.steps, step.emitted, state);
        red.terms.push_back(std::move(step.emitted));
        state = std::move(step.next);
    }

    if (std::optional<RationalTerm> t = base_case(state)) {
        require_slack_support(*t);
        trace_term(sink, Stage::base_case, label, red.steps, *t, state);
        red.terms.push_back(std::move(*t));
    } else if (sink) {
        TraceRecord rec{Stage::base_case, {}};
        rec.add("side", label);
        rec.add("step", std::to_string(red.steps));
        rec.add("index", "0");
        rec.add("zero", "1");
        (*sink)(rec);
    }
    return red;
}

} // namespace denum
