#include "doctest.h"
#include "hilbsq/cones.hpp"

using namespace hilbsq;
using namespace hilbsq::cones;
using lattice::HLClass;

TEST_CASE("cone memberships of the named classes") {
    const ConeReport h = cone_report(HLClass{1, 0});
    CHECK(h.in_nef_x);
    CHECK_FALSE(h.in_nef_xprime);
    CHECK(h.in_birational_kahler_closure);
    CHECK(h.is_big);

    const ConeReport l = cone_report(HLClass{0, 1});
    CHECK(l.in_nef_xprime);
    CHECK_FALSE(l.in_nef_x);
    CHECK_FALSE(l.is_big);

    const ConeReport wall = cone_report(HLClass{1, 2});
    CHECK(wall.in_nef_x);
    CHECK(wall.in_nef_xprime);
    CHECK(wall.on_flop_wall);
    CHECK(wall.is_big);
    CHECK(lattice::hl_square(HLClass{1, 2}) == 10);

    // H+delta = 2H - L sits on the boundary of the positive cone.
    const HLClass h_plus_delta{2, -1};
    const ConeReport boundary = cone_report(h_plus_delta);
    CHECK(boundary.in_positive_cone_closure);
    CHECK(lattice::hl_square(h_plus_delta) == 0);
    CHECK_FALSE(boundary.in_birational_kahler_closure);
    CHECK_FALSE(boundary.is_big);
}

TEST_CASE("zero class is in every closure but not on the wall") {
    const ConeReport zero = cone_report(HLClass{0, 0});
    CHECK(zero.in_positive_cone_closure);
    CHECK(zero.in_birational_kahler_closure);
    CHECK(zero.in_nef_x);
    CHECK(zero.in_nef_xprime);
    CHECK_FALSE(zero.on_flop_wall);
    CHECK_FALSE(zero.is_big);
}

TEST_CASE("exhaustive sweep: nesting, wall ray, tie-break, bigness") {
    for (long a = -100; a <= 100; ++a) {
        for (long b = -100; b <= 100; ++b) {
            const HLClass c{Int(a), Int(b)};
            const ConeReport r = cone_report(c);
            const bool zero = a == 0 && b == 0;
            const Int q = lattice::hl_square(c);

            // Cone nesting.
            if (r.in_nef_x) REQUIRE(r.in_birational_kahler_closure);
            if (r.in_nef_xprime) REQUIRE(r.in_birational_kahler_closure);
            if (r.in_birational_kahler_closure) REQUIRE(r.in_positive_cone_closure);

            // Nef(X) and Nef(X') meet exactly in the positive ray of (1, 2).
            const bool in_both = r.in_nef_x && r.in_nef_xprime && !zero;
            const bool on_ray = a > 0 && b == 2 * a;
            REQUIRE(in_both == on_ray);
            REQUIRE(r.on_flop_wall == in_both);

            // Tie-break soundness of the positive-cone test.
            if (q == 0 && lattice::hl_pair(c, HLClass{1, 1}) == 0) REQUIRE(zero);

            // Generator form of the positive-cone slice <H+delta, H-delta>:
            // c = alpha*(2,-1) + beta*(0,1) with alpha, beta >= 0.
            const bool generator_form = a >= 0 && a + 2 * b >= 0;
            REQUIRE(generator_form == r.in_positive_cone_closure);

            // All of Nef(X) is big away from zero; on Nef(X') only the
            // multiples of L are isotropic.
            if (r.in_nef_x && !zero) REQUIRE(q > 0);
            if (r.in_nef_xprime) REQUIRE((q == 0) == (a == 0));
        }
    }
}
