#include "hilbsq/citations.hpp"

namespace hilbsq::citations {

const std::map<std::string, std::string>& registry() {
    static const std::map<std::string, std::string> table = {
        {"base-locus-h-plus-l",
         "On the Hilbert square of a degree-2 K3 surface, H+L is ample and its "
         "base locus is exactly the flopped plane, a P^2; it is the unique big "
         "and nef class on X with a non-empty base locus."},
        {"base-locus-reduced",
         "The base-locus scheme of H+L carries the reduced induced structure "
         "on that plane."},
        {"bbf-form-decomposition",
         "H^2 of the Hilbert scheme of n points splits off an extra class "
         "delta with q(delta) = -2(n-1); for alpha = a*lambda + b*delta with "
         "q(lambda) = 2*d0, the square is q(alpha) = 2*d0*a^2 - 2*(n-1)*b^2."},
        {"birational-kahler-cone",
         "The closure of the birational Kaehler cone meets the rational "
         "Picard plane in the cone spanned by H and L."},
        {"cross-product-lines",
         "The antisymmetric sections s_i coincide with the components of the "
         "cross product, so each s_i cuts out the preimage of the i-th dual "
         "coordinate line under the map sending a length-2 subscheme of P^2 "
         "to the line it spans."},
        {"discriminant-k3n",
         "The Picard-type lattice of the Hilbert scheme of n points on a K3 "
         "surface has discriminant 2(n-1); for n = 2 the discriminant is 2."},
        {"div-divides-discriminant",
         "The divisibility of a primitive class in a lattice always divides "
         "the discriminant of the lattice."},
        {"divisibility-formula",
         "For alpha = a*lambda + b*delta with lambda primitive in the "
         "unimodular K3 lattice, div(alpha) = gcd(a, 2*b*(n-1))."},
        {"flop-constant-half",
         "The proportionality constant m relating degrees on lines in the "
         "flopped plane to pairings with the wall class equals exactly 1/2 "
         "here, the smallest value the general bound m >= 1/2 allows."},
        {"flop-wall",
         "Nef(X) and Nef(X') intersect exactly in the ray spanned by "
         "3H-2delta = H+2L; the wall class W = 2H-3delta is orthogonal to "
         "that ray."},
        {"generic-bpf",
         "For every square 2d > 0 and divisibility m with (d, m) != (3, 2), "
         "the polarization of a generic polarized pair of this deformation "
         "type is base point free."},
        {"generic-bpf-exceptional",
         "Also for square 6 and divisibility 2 the generic polarization is "
         "base point free: the special member H+L has reduced base locus and "
         "deforms to base point free bundles."},
        {"h-base-point-free",
         "H is induced by the degree-2 polarization of the underlying K3 "
         "surface; it is big, nef and base point free, and so is every "
         "nonnegative multiple of it."},
        {"kernel-basis",
         "For each k mod 3 the element s_{k+1} (x) t_{k+2} + s_{k+2} (x) "
         "t_{k+1} + 2 s_k (x) v_k multiplies to the zero form of bidegree "
         "(2,2); the three elements are independent and span the kernel."},
        {"kernel-dimension-bridge",
         "The kernel of the geometric multiplication map on sections of L "
         "and H has the same dimension as the kernel of its bidegree-(1,1) "
         "model on P^2 x P^2."},
        {"lagrangian-fibration",
         "A primitive nef class with square zero on a variety of K3^[n] type "
         "induces a Lagrangian fibration over P^n; it is base point free "
         "with exactly n+1 independent sections."},
        {"line-degree-formula",
         "Every class A restricts to a line C in the flopped plane with "
         "degree deg(A|_C) = (1/2)(A, W)_q, which is 2a-b in (H, L) "
         "coordinates."},
        {"mayer-criterion",
         "A big and nef line bundle on a K3 surface has base points if and "
         "only if it decomposes as mE + C with m >= 2, a smooth elliptic E "
         "with q(E) = 0 and a smooth rational C with q(C) = -2 and "
         "(E, C) = 1; the base locus is then C."},
        {"mayer-rank-one",
         "On a K3 surface whose Picard group is generated by a single ample "
         "class, that class is base point free; no Mayer decomposition "
         "exists in a rank-1 lattice."},
        {"moduli-witness-div1",
         "For every d >= 1 the Hilbert square of a K3 surface with a "
         "degree-2d polarization carries a primitive class of square 2d and "
         "divisibility 1, induced from the polarization."},
        {"moduli-witness-div2",
         "A primitive class of divisibility 2 on a K3^[2]-type variety has "
         "square 2(4k-1) for some k >= 1, so the square is congruent to 6 "
         "mod 8; H + (2k-1)L realizes every admissible square."},
        {"mu-kernel-dimension",
         "The kernel of the bidegree-(1,1) model of the multiplication map "
         "is exactly three-dimensional."},
        {"mu-surjective",
         "The multiplication map from sections(L) tensor sections(H) to "
         "sections(H+L) has 15-dimensional image, hence is surjective onto "
         "the 15-dimensional target."},
        {"nef-cone-x",
         "Nef(X) is the cone spanned by H and 3H-2delta = H+2L; in (H, L) "
         "coordinates a class aH+bL is nef on X iff b >= 0 and 2a >= b."},
        {"nef-cone-xprime",
         "Nef(X') is the cone spanned by 3H'-2delta' = H'+2L' and "
         "L' = H'-delta'; in (H, L) coordinates a class aH+bL is nef on X' "
         "iff a >= 0 and b >= 2a."},
        {"positive-cone",
         "The positive cone is the component of {q > 0} containing an ample "
         "class; its rational closure in the example is spanned by H+delta "
         "and H-delta."},
        {"pullback-comparison",
         "Pullbacks of corresponding bundles from the two sides of the flop "
         "compare as phi'*(A') = phi*(A) + (1/2)(A, W)_q E on the common "
         "blow-up, whose canonical bundle is E."},
        {"pullback-restriction-x",
         "A bundle pulled back from X restricts to the exceptional divisor "
         "E inside P^2 x P^2* as O((1/2)(A, W)_q, 0)."},
        {"pullback-restriction-xprime",
         "A bundle pulled back from X' restricts to the exceptional divisor "
         "E inside P^2 x P^2* as O(0, -(1/2)(A', W')_q)."},
        {"riemann-roch-k3n",
         "For a line bundle A on a variety of K3^[n] type, chi(A) = "
         "binomial(q(A)/2 + n + 1, n)."},
        {"tautological-determinant",
         "For k >= 3 the tautological rank-2 bundle attached to k times the "
         "degree-2 polarization is globally generated and has determinant "
         "kH - delta = (k-1)H + L, so (k-1)H + L is base point free."},
        {"vanishing-route-x",
         "For a nef class aH+bL on X with b >= 2, the restriction to E is "
         "globally generated and the twist by -2E stays big and nef, so the "
         "first cohomology of the twist by -E vanishes and sections "
         "restrict onto E; no base point survives."},
        {"vanishing-route-xprime",
         "For a nef class aH'+bL' on X' with a >= 1, the restriction to E "
         "is globally generated and the twist by -2E stays big and nef, so "
         "the first cohomology of the twist by -E vanishes and sections "
         "restrict onto E; no base point survives."},
        {"wall-pullback-equal",
         "A class that is nef on both models pairs to zero with the wall "
         "class and pulls back identically from either side of the flop."},
    };
    return table;
}

const std::string& quote(const std::string& statement_id) {
    return registry().at(statement_id);
}

Citation cite(const std::string& statement_id) {
    return Citation{statement_id, quote(statement_id)};
}

}  // namespace hilbsq::citations
