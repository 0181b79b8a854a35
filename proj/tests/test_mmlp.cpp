#include "doctest.h"

#include "support.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/mmlp.hpp"

using namespace tpoly;
using namespace testsupport;

TEST_CASE("square solves to the four-term polynomial") {
    MmlpResult r = mmlp(validate_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    CHECK(r.poly == parse_laurent("x + y + x^-1 + y^-1"));
    CHECK(r.solution_dim == 0);
}

TEST_CASE("all ten reference polygons solve uniquely at depth 3") {
    for (const FanoPolygon& P : reference_polygons()) {
        MmlpResult r = mmlp(P, 3);
        CHECK(r.solution_dim == 0);
        CHECK(r.poly.coeff({0, 0}) == 0);
        CHECK(edge_slices_binomial(P, r.poly));
        CHECK(newton_polygon(r.poly) == P);
    }
}

TEST_CASE("polygons with residual cones are rejected") {
    FanoPolygon P = validate_fano({{-2, -1}, {1, -1}, {2, 1}, {-2, 1}});
    try {
        mmlp(P);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_t_polygon);
    }
}

TEST_CASE("construction commutes with mutation of the polygon") {
    // Solving on a mutated polygon gives the algebraic mutation of the
    // solution on the original polygon (both are the unique normalized
    // maximally mutable polynomial on their Newton polygon).
    Rng rng(test_seed() + 20);
    int done = 0;
    while (done < 15) {
        FanoPolygon P = random_t_walk(rng, 1);
        auto m = random_mutation_of(rng, P);
        if (!m) continue;
        MmlpResult a = mmlp(P);
        FanoPolygon Q = mutate_polygon(P, *m);
        MmlpResult b = mmlp(Q);
        LaurentPoly mutated =
            algebraic_mutation(a.poly, m->v, binomial_factor(m->w, m->k));
        CHECK(b.poly == mutated);
        ++done;
    }
}

TEST_CASE("deeper search never changes an already-pinned solution") {
    for (const FanoPolygon& P : reference_polygons()) {
        MmlpResult deep = mmlp(P, 3);
        CHECK(mmlp(P, 4).poly == deep.poly);
        // Depth 1 may leave freedom (reported as an error); when it does
        // pin the solution, it must already be the deep one.
        try {
            CHECK(mmlp(P, 1).poly == deep.poly);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::non_unique_solution);
            CHECK(e.detail() > 0);
        }
    }
}

TEST_CASE("period of the reference solutions starts 1, 0") {
    for (const FanoPolygon& P : reference_polygons()) {
        std::vector<Rat> c = period_coefficients(mmlp(P).poly, 1);
        CHECK(c[0] == 1);
        CHECK(c[1] == 0);
    }
}
