#ifndef HILBSQ_FLOP_HPP
#define HILBSQ_FLOP_HPP

#include <string>
#include <vector>

#include "hilbsq/cones.hpp"
#include "hilbsq/lattice.hpp"

namespace hilbsq::flop {

// An element phi*(base) + e_coeff * E of the Picard group of the common
// blow-up of X and X'.  The coefficient is kept rational to make the
// m = 1/2 arithmetic visible; every class coming from X or X' has an
// integral coefficient because (., W)_q is even.
struct BlowupClass {
    lattice::HLClass base;
    Rat e_coeff;

    friend bool operator==(const BlowupClass& lhs, const BlowupClass& rhs) {
        return lhs.base == rhs.base && cmp(lhs.e_coeff, rhs.e_coeff) == 0;
    }
};

// The pair (s, t) such that a blow-up class restricts to the exceptional
// divisor E, sitting inside P^2 x P^2*, as O(s, t).
struct ExceptionalBidegree {
    Int s;
    Int t;

    friend bool operator==(const ExceptionalBidegree&, const ExceptionalBidegree&) = default;
};

// The constant m with deg(A|_C) = m * (A, W)_q on lines C of the flopped
// plane; exactly 1/2 in this geometry.
Rat flop_constant();

// deg(A|_C) = (1/2)(A, W)_q = 2a - b in (H, L) coordinates.
Int line_degree(const lattice::HLClass& c);

// phi*(A) itself, and phi'*(A') expressed in the phi-basis of the blow-up:
// phi'*(A') = phi*(A) + (1/2)(A, W)_q * E.
BlowupClass pullback_from_x(const lattice::HLClass& c);
BlowupClass pullback_from_xprime(const lattice::HLClass& c);

// Restriction to E: (s, t) = ((1/2)(base, W)_q - e_coeff, -e_coeff).
// Throws NonIntegralRestriction if e_coeff is not an integer.
ExceptionalBidegree restrict_to_e(const BlowupClass& bc);

// One checked inequality (or invoked fact) of the base-point-freeness
// argument, with the statement that backs it.
struct TraceStep {
    std::string check;
    std::string statement;
    bool holds;
};

struct VanishingTrace {
    bool applies;
    std::vector<TraceStep> steps;
};

// Replays the sufficient conditions for base point freeness of a class nef
// on the given model, with m = 1/2.  A false answer means "the argument
// does not apply", not "base points exist"; among nef classes it is false
// exactly for H+L on X.  Throws NotNef off the nef cone.
VanishingTrace vanishing_argument_applies(const lattice::HLClass& c, cones::Model model);

}  // namespace hilbsq::flop

#endif
