#include "hilbsq/flop.hpp"

#include "hilbsq/errors.hpp"

namespace hilbsq::flop {

namespace {

Int half_pairing_with_wall(const lattice::HLClass& c) {
    // (c, W)_q = 4a - 2b, so the half is 2a - b, always integral.
    return 2 * c.a - c.b;
}

TraceStep step(std::string check, std::string statement, bool holds) {
    return TraceStep{std::move(check), std::move(statement), holds};
}

}  // namespace

Rat flop_constant() { return Rat(1, 2); }

Int line_degree(const lattice::HLClass& c) { return half_pairing_with_wall(c); }

BlowupClass pullback_from_x(const lattice::HLClass& c) {
    return BlowupClass{c, Rat(0)};
}

BlowupClass pullback_from_xprime(const lattice::HLClass& c) {
    return BlowupClass{c, Rat(half_pairing_with_wall(c))};
}

ExceptionalBidegree restrict_to_e(const BlowupClass& bc) {
    Rat gamma = bc.e_coeff;
    gamma.canonicalize();
    if (gamma.get_den() != 1)
        throw NonIntegralRestriction(
            "restriction to E needs an integral coefficient of E, got " +
            hilbsq::to_string(gamma));
    const Int g = gamma.get_num();
    return ExceptionalBidegree{half_pairing_with_wall(bc.base) - g, -g};
}

VanishingTrace vanishing_argument_applies(const lattice::HLClass& c, cones::Model model) {
    if (!cones::nef_on(c, model))
        throw NotNef("the vanishing argument is only replayed for nef classes");

    const Int& a = c.a;
    const Int& b = c.b;
    VanishingTrace trace{true, {}};
    auto record = [&trace](TraceStep s) {
        trace.applies = trace.applies && s.holds;
        trace.steps.push_back(std::move(s));
    };

    if (model == cones::Model::Xprime) {
        if (a == 0) {
            record(step("class is a multiple of L, the Lagrangian fibration class",
                        "lagrangian-fibration", true));
            return trace;
        }
        record(step("bigness of the twist by -2E (the canonical bundle of the "
                    "blow-up is E): 4*m*a - 2 = 2a - 2 >= 0",
                    "vanishing-route-xprime", 2 * a - 2 >= 0));
        const BlowupClass twist{c, pullback_from_xprime(c).e_coeff - 2};
        const ExceptionalBidegree r = restrict_to_e(twist);
        record(step("twist restricts to E as O(" + to_string(r.s) + ", " +
                        to_string(r.t) + "), both components >= 0",
                    "pullback-restriction-xprime", r.s >= 0 && r.t >= 0));
        record(step("restriction of the pullback to E is O(0, b - 2a) with b >= 2a",
                    "nef-cone-xprime", b >= 2 * a));
        return trace;
    }

    // model X
    if (b == 0) {
        record(step("class is a multiple of H", "h-base-point-free", true));
        return trace;
    }
    if (b >= 2) {
        record(step("bigness of the twist by -2E (the canonical bundle of the "
                    "blow-up is E): 2*m*b - 2 = b - 2 >= 0",
                    "vanishing-route-x", b - 2 >= 0));
        const ExceptionalBidegree r = restrict_to_e(pullback_from_x(c));
        record(step("pullback restricts to E as O(" + to_string(r.s) +
                        ", 0), globally generated since 4a - 2b >= 0",
                    "pullback-restriction-x", 4 * a - 2 * b >= 0));
        return trace;
    }
    if (b == 1 && a >= 2) {
        const Int k = a + 1;
        record(step("tautological route: det((" + to_string(k) + "H_S)^[2]) = " +
                        to_string(k) + "H - delta = " + to_string(a) +
                        "H + L, globally generated",
                    "tautological-determinant", true));
        return trace;
    }
    // b == 1, a == 1: the class H+L, where m = 1/2 defeats both routes.
    record(step("no sufficient condition covers H+L: the bigness coefficient "
                "2*m*b - 2 = -1 is negative and the tautological route needs "
                "a >= 2",
                "flop-constant-half", false));
    return trace;
}

}  // namespace hilbsq::flop
