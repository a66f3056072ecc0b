#ifndef HILBSQ_BASELOCUS_HPP
#define HILBSQ_BASELOCUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "hilbsq/citations.hpp"
#include "hilbsq/cones.hpp"
#include "hilbsq/flop.hpp"
#include "hilbsq/lattice.hpp"

namespace hilbsq::baselocus {

enum class Verdict { Free, PlaneP2Reduced, NotNef, ZeroClass };

const char* to_string(Verdict v);

// Base-locus verdict with the statements that decided it.  Among nef
// classes of the example, the only non-free big and nef class is H+L on X,
// whose base locus is a plane with reduced structure.
struct BaseLocusReport {
    Verdict verdict;
    bool big;
    std::vector<citations::Citation> citations;
};

// Classifies the base locus of a*H + b*L on the given model.  Free
// verdicts are re-derived from the vanishing/tautological/fibration traces
// rather than looked up, so the classification cannot drift from the
// argument that proves it.
BaseLocusReport classify(const lattice::HLClass& c, cones::Model model);

// A numerical decomposition h = m*E + C with m >= 2, q(E) = 0, q(C) = -2,
// (E, C) = 1 in a Gram lattice.  Candidates are numerical only:
// effectivity and smoothness of E and C are not lattice-decidable and are
// not checked.
struct MayerDecomposition {
    Int m;
    std::vector<Int> e;
    std::vector<Int> c;

    friend bool operator==(const MayerDecomposition&, const MayerDecomposition&) = default;
};

// All decompositions with E-coefficients in [-coeff_bound, coeff_bound]
// and 2 <= m <= coeff_bound, ordered by ascending m then lexicographic E.
// Throws RankUnsupported for rank > 2 and NotBig for q(h) <= 0.
// Parallelizes over m when OpenMP is enabled; the output order is
// identical to the serial reference.
std::vector<MayerDecomposition> mayer_search(const lattice::GramLattice& g,
                                             const std::vector<Int>& h,
                                             const Int& coeff_bound);

// Plain-loop reference implementation with the same contract.
std::vector<MayerDecomposition> mayer_search_serial(const lattice::GramLattice& g,
                                                    const std::vector<Int>& h,
                                                    const Int& coeff_bound);

// Verdict about the moduli space of pairs (X, A) with A primitive ample,
// q(A) = 2d and div(A) = m.
struct ModuliVerdict {
    bool nonempty;
    std::optional<lattice::GeneralClass> witness;
    bool generic_bpf;  // meaningful only when nonempty
    std::vector<citations::Citation> citations;
};

// Non-emptiness with an explicit witness: always nonempty for m = 1; for
// m = 2 nonempty exactly when d = 3 mod 4, witnessed by H + (2k-1)L with
// k = (d+1)/4.  Throws NonPositiveSquare for d <= 0 and
// UnsupportedDivisibility for m outside {1, 2}.
ModuliVerdict moduli_nonempty(const Int& d, int m);

// Adds the generic base-point-freeness verdict: true whenever the moduli
// space is nonempty, with the citation distinguishing the general case
// from (d, m) = (3, 2).
ModuliVerdict generic_bpf(const Int& d, int m);

}  // namespace hilbsq::baselocus

#endif
