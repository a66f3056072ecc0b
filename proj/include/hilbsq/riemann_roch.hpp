#ifndef HILBSQ_RIEMANN_ROCH_HPP
#define HILBSQ_RIEMANN_ROCH_HPP

#include <optional>

#include "hilbsq/cones.hpp"
#include "hilbsq/lattice.hpp"

namespace hilbsq::riemann_roch {

enum class SectionJustification { KodairaBigNef, LagrangianPrimitive, NotDetermined };

// Euler characteristic, and the number of sections where a stated theorem
// pins it down.  h0 stays empty otherwise; the library never extrapolates.
struct SectionCount {
    Int chi;
    std::optional<Int> h0;
    SectionJustification justification;
};

// chi = C(q/2 + n + 1, n), exact; throws OddSquare for odd q.
Int euler_characteristic(const Int& q_value, long n);

// Section count of a class that is nef on the given model (else NotNef):
// big classes get h0 = chi, primitive isotropic classes on X' get
// h0 = n + 1 = 3, everything else is NotDetermined.
SectionCount section_count(const lattice::HLClass& c, cones::Model model);

const char* to_string(SectionJustification j);

}  // namespace hilbsq::riemann_roch

#endif
