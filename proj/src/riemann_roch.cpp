#include "hilbsq/riemann_roch.hpp"

#include <stdexcept>

#include "hilbsq/errors.hpp"

namespace hilbsq::riemann_roch {

Int euler_characteristic(const Int& q_value, long n) {
    if (n < 1) throw std::invalid_argument("euler_characteristic needs n >= 1");
    if (q_value % 2 != 0)
        throw OddSquare("the square of a class in an even lattice cannot be odd");
    return binomial(q_value / 2 + n + 1, n);
}

SectionCount section_count(const lattice::HLClass& c, cones::Model model) {
    if (!cones::nef_on(c, model))
        throw NotNef("section_count requires the class to be nef on the chosen model");

    const Int q = lattice::hl_square(c);
    SectionCount out{euler_characteristic(q, 2), std::nullopt,
                     SectionJustification::NotDetermined};

    if (q > 0) {
        out.h0 = out.chi;
        out.justification = SectionJustification::KodairaBigNef;
    } else if (q == 0 && model == cones::Model::Xprime && !c.is_zero() &&
               lattice::is_primitive(lattice::to_general(c))) {
        out.h0 = Int(3);  // n + 1 for n = 2
        out.justification = SectionJustification::LagrangianPrimitive;
    }
    return out;
}

const char* to_string(SectionJustification j) {
    switch (j) {
        case SectionJustification::KodairaBigNef: return "KodairaBigNef";
        case SectionJustification::LagrangianPrimitive: return "LagrangianPrimitive";
        case SectionJustification::NotDetermined: return "NotDetermined";
    }
    return "NotDetermined";
}

}  // namespace hilbsq::riemann_roch
