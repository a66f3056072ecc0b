#ifndef HILBSQ_CONES_HPP
#define HILBSQ_CONES_HPP

#include "hilbsq/lattice.hpp"

namespace hilbsq::cones {

// The two birational models of the Hilbert square in the genus-2 example.
enum class Model { X, Xprime };

// Closed-cone memberships of the chamber decomposition of the rational
// Picard plane.  All tests are closure tests on exact inequalities; is_big
// distinguishes the open condition q > 0.
struct ConeReport {
    bool in_positive_cone_closure;
    bool in_birational_kahler_closure;
    bool in_nef_x;
    bool in_nef_xprime;
    bool on_flop_wall;
    bool is_big;
};

// Membership report for a class in (H, L) coordinates:
//   Nef(X):      b >= 0 and 2a >= b
//   Nef(X'):     a >= 0 and b >= 2a
//   birational Kaehler closure: a >= 0 and b >= 0
//   positive cone closure: q(c) >= 0 and (c, H+L)_q >= 0
//   flop wall:   c != 0 and c is a positive multiple of H+2L
ConeReport cone_report(const lattice::HLClass& c);

bool nef_on(const lattice::HLClass& c, Model model);

const char* to_string(Model model);

}  // namespace hilbsq::cones

#endif
