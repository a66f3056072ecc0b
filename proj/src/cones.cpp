#include "hilbsq/cones.hpp"

namespace hilbsq::cones {

// The chamber structure below can also be read off from the wall-divisor
// list for this deformation type, {±delta, ±(3H±2delta)}: the only wall
// meeting the birational Kaehler cone is the one orthogonal to W.
ConeReport cone_report(const lattice::HLClass& c) {
    const Int& a = c.a;
    const Int& b = c.b;
    const Int q = lattice::hl_square(c);
    const lattice::HLClass h_plus_l{1, 1};

    ConeReport r{};
    r.in_nef_x = b >= 0 && 2 * a >= b;
    r.in_nef_xprime = a >= 0 && b >= 2 * a;
    r.in_birational_kahler_closure = a >= 0 && b >= 0;
    r.in_positive_cone_closure = q >= 0 && lattice::hl_pair(c, h_plus_l) >= 0;
    r.on_flop_wall = a > 0 && b == 2 * a;
    r.is_big = q > 0;
    return r;
}

bool nef_on(const lattice::HLClass& c, Model model) {
    const ConeReport r = cone_report(c);
    return model == Model::X ? r.in_nef_x : r.in_nef_xprime;
}

const char* to_string(Model model) {
    return model == Model::X ? "x" : "xprime";
}

}  // namespace hilbsq::cones
