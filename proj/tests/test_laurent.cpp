#include "doctest.h"

#include "support.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/mmlp.hpp"

using namespace tpoly;
using namespace testsupport;

namespace {

std::vector<Rat> rats(std::vector<long> xs) {
    return std::vector<Rat>(xs.begin(), xs.end());
}

} // namespace

TEST_CASE("parser accepts the documented grammar") {
    CHECK(parse_laurent("x") == LaurentPoly::monomial({1, 0}));
    CHECK(parse_laurent("-x") == LaurentPoly::monomial({1, 0}, -1));
    CHECK(parse_laurent("+x") == LaurentPoly::monomial({1, 0}));
    CHECK(parse_laurent("3") == LaurentPoly::monomial({0, 0}, 3));
    CHECK(parse_laurent("1/2*x*y^-2") ==
          LaurentPoly::monomial({1, -2}, Rat(1, 2)));
    CHECK(parse_laurent("x^2*y^3") == LaurentPoly::monomial({2, 3}));
    CHECK(parse_laurent("y^-1*x") == LaurentPoly::monomial({1, -1}));
    CHECK(parse_laurent("x + x") == LaurentPoly::monomial({1, 0}, 2));
    CHECK(parse_laurent("x - x").is_zero());
    CHECK(parse_laurent("2*x - y + 1").coeff({0, 0}) == 1);
}

TEST_CASE("parser rejects malformed input with a byte offset") {
    for (const char* bad : {"", "x++y", "z", "x^", "x*", "1/", "x^2^3",
                            "x*x", "(x+y)", "2x", "x^1.5", "1/0"}) {
        try {
            parse_laurent(bad);
            CHECK_MESSAGE(false, "accepted: ", bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::syntax_error);
            CHECK(e.detail() >= 0);
            CHECK(e.detail() <= (long long)std::string(bad).size());
        }
    }
}

TEST_CASE("printer and parser round-trip") {
    CHECK(to_string(parse_laurent("x+y+x^-1+y^-1")) ==
          "x^-1 + y^-1 + y + x");
    Rng rng(test_seed() + 10);
    for (int i = 0; i < 100; ++i) {
        LaurentPoly f = random_laurent(rng);
        CHECK(parse_laurent(to_string(f)) == f);
    }
}

TEST_CASE("arithmetic on terms") {
    LaurentPoly f = parse_laurent("x + y");
    LaurentPoly g = parse_laurent("x - y");
    CHECK(f * g == parse_laurent("x^2 - y^2"));
    CHECK(f + g == parse_laurent("2*x"));
    CHECK(f - f == LaurentPoly{});
    CHECK(f * Rat(1, 2) == parse_laurent("1/2*x + 1/2*y"));
}

TEST_CASE("known period sequences") {
    CHECK(period_coefficients(parse_laurent("x+y+x^-1+y^-1"), 6) ==
          rats({1, 0, 4, 0, 36, 0, 400}));
    CHECK(period_coefficients(parse_laurent("x"), 3) == rats({1, 0, 0, 0}));
    CHECK(period_coefficients(parse_laurent("x+y+x^-1*y^-1"), 3) ==
          rats({1, 0, 0, 6}));
}

TEST_CASE("period coefficients agree with the multinomial oracle") {
    Rng rng(test_seed() + 11);
    for (int i = 0; i < 40; ++i) {
        LaurentPoly f = random_laurent(rng);
        std::vector<Rat> got = period_coefficients(f, 4);
        for (i64 d = 0; d <= 4; ++d)
            CHECK(got[static_cast<std::size_t>(d)] == const_term_oracle(f, d));
    }
}

TEST_CASE("period fingerprints compare by value") {
    PeriodFingerprint a = period_fingerprint(parse_laurent("x+y+x^-1+y^-1"), 6);
    CHECK(a.horizon == 6);
    CHECK(a.coeffs == rats({1, 0, 4, 0, 36, 0, 400}));
    PeriodFingerprint b =
        period_fingerprint(parse_laurent("y+x+y^-1+x^-1"), 6);
    CHECK(a == b);
}

TEST_CASE("newton polygon of a Fano-supported polynomial") {
    LaurentPoly f = parse_laurent("x+y+x^-1+y^-1");
    CHECK(newton_polygon(f) ==
          validate_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
    // Degenerate support is rejected.
    CHECK_THROWS_AS(newton_polygon(parse_laurent("x")), Error);
    CHECK_THROWS_AS(newton_polygon(parse_laurent("x + x^2")), Error);
}

TEST_CASE("binomial factors expand correctly") {
    CHECK(binomial_factor({1, 0}, 2) == parse_laurent("1 + 2*x + x^2"));
    CHECK(binomial_factor({1, -1}, 1) == parse_laurent("1 + x*y^-1"));
    CHECK(binomial_factor({0, 1}, 3) ==
          parse_laurent("1 + 3*y + 3*y^2 + y^3"));
}

TEST_CASE("algebraic mutation: worked one-slice example") {
    LaurentPoly f = parse_laurent("y + y^-1 + 2*x*y^-1 + x^2*y^-1");
    LaurentPoly g = algebraic_mutation(f, {0, 1}, parse_laurent("1+x"));
    CHECK(g == parse_laurent("y + x*y + y^-1 + x*y^-1"));
    // Mutating back with the reflected direction restores f.
    CHECK(algebraic_mutation(g, {0, -1}, parse_laurent("1+x")) == f);
}

TEST_CASE("algebraic mutation refuses non-divisible slices") {
    LaurentPoly f = parse_laurent("x+y+x^-1*y^-1");
    try {
        algebraic_mutation(f, {0, 1}, parse_laurent("1+x"));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_mutable);
    }
}

TEST_CASE("algebraic mutation preserves the period") {
    LaurentPoly f = parse_laurent("y + y^-1 + 2*x*y^-1 + x^2*y^-1");
    LaurentPoly g = algebraic_mutation(f, {0, 1}, parse_laurent("1+x"));
    CHECK(period_coefficients(f, 6) == period_coefficients(g, 6));
}

TEST_CASE("unimodular changes of basis preserve periods and hulls") {
    Rng rng(test_seed() + 12);
    for (int i = 0; i < 30; ++i) {
        LaurentPoly f = random_laurent(rng);
        // (x, y) -> columns (1,0),(1,1): det 1.
        LaurentPoly g = apply_unimodular(f, {1, 0}, {1, 1});
        CHECK(period_coefficients(f, 4) == period_coefficients(g, 4));
    }
}

TEST_CASE("canonical form is a unimodular invariant") {
    Rng rng(test_seed() + 13);
    int done = 0;
    while (done < 30) {
        LaurentPoly f = random_laurent(rng, 6);
        try {
            support_hull(f);
            if (support_hull(f).size() < 3) continue; // needs a 2d support
        } catch (const Error&) {
            continue;
        }
        LaurentPoly g = apply_unimodular(f, {1, 0}, {1, 1});
        LaurentPoly h = apply_unimodular(f, {0, -1}, {1, 0});
        CHECK(laurent_canonical(f) == laurent_canonical(g));
        CHECK(laurent_canonical(f) == laurent_canonical(h));
        ++done;
    }
}

TEST_CASE("bounded equivalence search connects mutation pairs") {
    FanoPolygon P3 = validate_fano({{1, 1}, {-2, 1}, {1, -2}});
    LaurentPoly f = mmlp(P3).poly;
    auto m = admissible_mutations(P3);
    REQUIRE(!m.empty());
    LaurentPoly g =
        algebraic_mutation(f, m[0].v, binomial_factor(m[0].w, m[0].k));

    LaurentChainResult hit = mutation_equivalent_laurent(f, g, 500, 3);
    CHECK(hit.found);
    CHECK(!hit.chain.empty());

    LaurentChainResult self = mutation_equivalent_laurent(f, f, 500, 3);
    CHECK(self.found);
    CHECK(self.chain.empty());

    // Different classes never meet: distinct period fingerprints.
    LaurentPoly f9 = parse_laurent("x+y+x^-1+y^-1");
    LaurentPoly f10 = parse_laurent("x+y+x^-1*y^-1");
    LaurentChainResult miss = mutation_equivalent_laurent(f9, f10, 200, 3);
    CHECK_FALSE(miss.found);
}

TEST_CASE("support hull is exact on collinear support") {
    LaurentPoly f = parse_laurent("1 + 2*x + x^2");
    std::vector<LatticePoint> hull = support_hull(f);
    CHECK(hull == std::vector<LatticePoint>{{0, 0}, {2, 0}});
    CHECK_THROWS_AS(support_hull(LaurentPoly{}), Error);
}
