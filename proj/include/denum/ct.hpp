#pragma once

#include <optional>
#include <vector>

#include "denum/exact_arith.hpp"
#include "denum/trace.hpp"

namespace denum {

/// lambda^lam * z^z
struct LaurentMonomial {
    Integer lam;
    ExpVec z;

    friend bool operator==(const LaurentMonomial& a, const LaurentMonomial& b) {
        return a.lam == b.lam && a.z == b.z;
    }
};

/// 1 - lambda^lam * z^z
struct Factor {
    Integer lam;
    ExpVec z;

    friend bool operator==(const Factor& a, const Factor& b) {
        return a.lam == b.lam && a.z == b.z;
    }
};

/// One underlined constant term of the three-factor family
///
///   CT_lambda  (num1 - num2) / (underline * unit * third),
///
/// where only the underlined factor contributes its partial-fraction
/// component. The underline's lambda-exponent is the state's index
/// (>= 0), the middle factor always has lambda-exponent 1, and the third
/// factor may carry any integer lambda-exponent.
struct CTState {
    Factor underline;
    Factor unit;
    Factor third;
    LaurentMonomial num1, num2;
};

/// Enforces the state invariants: unit.lam == 1, underline.lam >= 0,
/// and no factor with empty slack support. Throws internal_error.
void check_state(const CTState& s);

/// (z^m1 - z^m2) / ((1 - z^omega)(1 - z^theta)); omega, theta != 0.
struct RationalTerm {
    ExpVec m1, m2, omega, theta;

    friend bool operator==(const RationalTerm& a, const RationalTerm& b) {
        return a.m1 == b.m1 && a.m2 == b.m2 && a.omega == b.omega && a.theta == b.theta;
    }
};

/// A contribution before the unit transformation: three factor roles
/// (underline / to-unit / third), each an index on its own slack axis,
/// plus the two numerator monomials.
struct RawContribution {
    Integer underline_index;
    Slack underline_axis;
    Integer to_unit_index;
    Slack to_unit_axis;
    Integer third_index;
    Slack third_axis;
    LaurentMonomial num1, num2;
};

/// Applies the key transformation with multiplier v from
/// bezout_unit(underline_index, to_unit_index): every lambda-exponent
/// outside the underline is multiplied by v, the underline's slack
/// exponent becomes 1/v, and the to-unit factor turns into the unit
/// factor with slack exponent e_B + (u/v) e_A. A to-unit index of 1
/// degenerates to a pass-through (v = 1, u = 0).
///
/// Requires gcd(underline_index, to_unit_index) == 1, both >= 1;
/// violation means an upstream reduction failed.
CTState to_unit_state(const RawContribution& contrib);

struct EuclidStepResult {
    RationalTerm emitted;
    CTState next;
};

/// One step of the Euclid-style recursion on a state with index >= 2:
/// emits the unit-underlined rational function and returns the successor
/// state, whose index is at most half the current one.
EuclidStepResult euclid_step(const CTState& s);

/// Terminal states: index 0 contributes nothing; index 1 collapses to a
/// single rational function. Requires index <= 1.
std::optional<RationalTerm> base_case(const CTState& s);

struct Reduction {
    std::vector<RationalTerm> terms;
    unsigned long steps = 0; // euclid_step applications
};

/// Runs euclid_step until the index drops below 2, then the base case.
/// Asserts the index halves at every step, the step count stays within
/// floor(log2(initial index)) + 1, and every emitted denominator keeps
/// slack support outside z1. `label` names the contribution ("a" or "b")
/// in trace records.
Reduction reduce_contribution(CTState state, TraceSink* sink = nullptr,
                              const char* label = "");

} // namespace denum
