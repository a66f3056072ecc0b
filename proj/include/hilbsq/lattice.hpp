#ifndef HILBSQ_LATTICE_HPP
#define HILBSQ_LATTICE_HPP

#include <string>
#include <utility>
#include <vector>

#include "hilbsq/numeric.hpp"

namespace hilbsq::lattice {

// A formal class a*lambda + b*delta on a K3^[n]-type variety, where lambda
// is a primitive class of the underlying K3 surface with q(lambda) = 2*d0
// and q(delta) = -2(n-1) is implied by n, never stored.
//
// lambda is opaque: two classes interact only if they declare the same
// lambda_tag (and hence the same d0 and n).
struct GeneralClass {
    Int a;
    Int b;
    Int half_lambda_square;  // d0, with q(lambda) = 2*d0
    long n = 2;              // Hilbert-scheme parameter, n >= 2
    std::string lambda_tag = "lambda";

    bool is_zero() const { return a == 0 && b == 0; }
};

Int bbf_square(const GeneralClass& c);

// Bilinear pairing; requires matching n, lambda_tag and d0, otherwise
// throws MismatchedAmbient.
Int bbf_pair(const GeneralClass& c1, const GeneralClass& c2);

// gcd(a, 2*b*(n-1)); throws ZeroClass for the zero class.
Int divisibility(const GeneralClass& c);

// gcd(|a|, |b|) == 1; throws ZeroClass for the zero class.
bool is_primitive(const GeneralClass& c);

// Discriminant 2(n-1) of the rank-24 lattice underlying K3^[n]-type.
Int lattice_discriminant(long n);

// Integer class a*H + b*L in the Picard lattice of the Hilbert square of a
// degree-2 K3 surface, where q(H) = 2, q(delta) = -2 and L = H - delta.
struct HLClass {
    Int a;  // coefficient of H
    Int b;  // coefficient of L

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const HLClass&, const HLClass&) = default;
};

// Basis changes between (H, L) and (H, delta) coordinates; mutually
// inverse, since L = H - delta.
std::pair<Int, Int> hl_to_hdelta(const HLClass& c);
HLClass hdelta_to_hl(const Int& a, const Int& b);

// The same class as a GeneralClass (d0 = 1, n = 2).
GeneralClass to_general(const HLClass& c);

// The wall class W = 2H - 3delta = -H + 3L.
HLClass wall_class();

// q and pairing evaluated directly on (H, L) coordinates.
Int hl_square(const HLClass& c);
Int hl_pair(const HLClass& c1, const HLClass& c2);

// A symmetric integer Gram matrix with even diagonal, the carrier for the
// K3-surface decomposition search and discriminant checks.
class GramLattice {
  public:
    // Validates symmetry, squareness and even diagonal; throws
    // std::invalid_argument on violation.
    explicit GramLattice(std::vector<std::vector<Int>> gram);

    int rank() const { return static_cast<int>(g_.size()); }
    const Int& entry(int i, int j) const { return g_[i][j]; }

    Int square(const std::vector<Int>& v) const;
    Int pair(const std::vector<Int>& u, const std::vector<Int>& v) const;

    // Determinant of the Gram matrix; supported for rank <= 2, throws
    // RankUnsupported beyond that.
    Int discriminant() const;

  private:
    std::vector<std::vector<Int>> g_;
};

}  // namespace hilbsq::lattice

#endif
