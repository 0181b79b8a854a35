#pragma once
// Shared test utilities: deterministic RNG, random generators for polygons
// and Laurent polynomials, and an independent constant-term oracle used to
// cross-check the production period computation.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tpoly/core.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/laurent.hpp"
#include "tpoly/mmlp.hpp"
#include "tpoly/polygon.hpp"

namespace testsupport {

using namespace tpoly;

// Fixed default seed so every run replays the same cases; override with
// TPOLY_TEST_SEED=<n> to explore.
inline std::uint64_t test_seed() {
    if (const char* env = std::getenv("TPOLY_TEST_SEED"))
        return std::strtoull(env, nullptr, 10);
    return 20260819ull;
}

using Rng = std::mt19937_64;

inline i64 rand_int(Rng& rng, i64 lo, i64 hi) {
    std::uniform_int_distribution<i64> d(lo, hi);
    return d(rng);
}

// Hull of a handful of random points in a small box, retried until it is a
// valid Fano polygon (convex, primitive vertices, origin strictly inside).
inline FanoPolygon random_fano(Rng& rng, i64 box = 3, int max_tries = 2000) {
    for (int t = 0; t < max_tries; ++t) {
        int n = static_cast<int>(rand_int(rng, 3, 6));
        std::vector<LatticePoint> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({rand_int(rng, -box, box), rand_int(rng, -box, box)});
        try {
            return validate_fano(pts);
        } catch (const Error&) {
        }
    }
    return validate_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

inline FanoPolygon random_t_polygon(Rng& rng, i64 box = 3,
                                    int max_tries = 20000) {
    for (int t = 0; t < max_tries; ++t) {
        FanoPolygon P = random_fano(rng, box);
        if (is_t_polygon(P)) return P;
    }
    return validate_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

// The ten reference vertex lists (same fixtures the shipped catalog is
// generated from); handy as guaranteed-distinct T-polygons.
inline std::vector<FanoPolygon> reference_polygons() {
    static const std::vector<std::vector<LatticePoint>> raw = {
        {{-1, -2}, {5, -2}, {-1, 4}},
        {{-1, -2}, {3, -2}, {-1, 2}},
        {{1, 1}, {-2, 1}, {1, -2}},
        {{1, 1}, {1, -1}, {-1, -1}, {-1, 1}},
        {{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}},
        {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
        {{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {0, -1}},
        {{1, 0}, {0, 1}, {-1, -1}, {0, -1}},
        {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
        {{1, 0}, {0, 1}, {-1, -1}},
    };
    std::vector<FanoPolygon> out;
    for (const auto& pts : raw) out.push_back(validate_fano(pts));
    return out;
}

inline std::optional<MutationData> random_mutation_of(Rng& rng,
                                                      const FanoPolygon& P) {
    std::vector<MutationData> ms = admissible_mutations(P);
    if (ms.empty()) return std::nullopt;
    return ms[static_cast<std::size_t>(rand_int(rng, 0, (i64)ms.size() - 1))];
}

// Inverse mutation: reflecting the direction undoes the slice rearrangement.
inline MutationData reverse_of(const MutationData& m) {
    return MutationData{{-m.v.x, -m.v.y}, m.w, m.k};
}

// A random T-polygon wandered a few mutation steps away from a clean seed.
inline FanoPolygon random_t_walk(Rng& rng, int max_steps = 2) {
    FanoPolygon P = (rand_int(rng, 0, 1) == 0)
                        ? reference_polygons()[static_cast<std::size_t>(
                              rand_int(rng, 0, 9))]
                        : random_t_polygon(rng);
    int steps = static_cast<int>(rand_int(rng, 0, max_steps));
    for (int s = 0; s < steps; ++s) {
        auto m = random_mutation_of(rng, P);
        if (!m) break;
        P = mutate_polygon(P, *m);
    }
    return P;
}

// Random Laurent polynomial: a few terms with small exponents and small
// rational coefficients.  No Fano constraint on the support.
inline LaurentPoly random_laurent(Rng& rng, int max_terms = 5, i64 box = 2) {
    LaurentPoly f;
    int n = static_cast<int>(rand_int(rng, 1, max_terms));
    for (int i = 0; i < n; ++i) {
        i64 p = rand_int(rng, -4, 4);
        if (p == 0) p = 1;
        i64 q = rand_int(rng, 1, 3);
        Rat c(p, q);
        c.canonicalize();
        f.add_term({rand_int(rng, -box, box), rand_int(rng, -box, box)}, c);
    }
    if (f.is_zero()) f.add_term({1, 0}, 1);
    return f;
}

// Independent constant-term oracle: multinomial expansion of f^d.  The
// production path computes powers by sparse convolution; this one instead
// enumerates exponent compositions d = k_1 + ... + k_r and accumulates
// d!/(k_1!...k_r!) * prod c_i^{k_i} over those with zero exponent sum.
inline Rat const_term_oracle(const LaurentPoly& f, i64 d) {
    std::vector<LatticePoint> exps;
    std::vector<Rat> coefs;
    for (const auto& [e, c] : f.terms()) {
        exps.push_back(e);
        coefs.push_back(c);
    }
    Rat total = 0;
    std::function<void(std::size_t, i64, i64, i64, const Rat&)> rec =
        [&](std::size_t i, i64 left, i64 sx, i64 sy, const Rat& partial) {
            if (i == exps.size()) {
                if (left == 0 && sx == 0 && sy == 0) total += partial;
                return;
            }
            Rat acc = partial;
            for (i64 k = 0; k <= left; ++k) {
                if (k > 0) {
                    acc *= Rat(left - k + 1);
                    acc /= Rat(k);
                    acc *= coefs[i];
                }
                rec(i + 1, left - k, sx + k * exps[i].x, sy + k * exps[i].y,
                    acc);
            }
        };
    rec(0, d, 0, 0, Rat(1));
    return total;
}

// True iff along every edge of P the coefficients of f are the binomial
// coefficients of (1 + x)^length read off vertex-to-vertex, i.e. every edge
// slice of f factors as a pure binomial power.
inline bool edge_slices_binomial(const FanoPolygon& P, const LaurentPoly& f) {
    std::size_t n = P.vertices.size();
    std::vector<EdgeData> edges = edge_data(P);
    for (std::size_t i = 0; i < n; ++i) {
        LatticePoint a = P.vertices[i];
        LatticePoint b = P.vertices[(i + 1) % n];
        i64 len = edges[i].length;
        LatticePoint step{(b.x - a.x) / len, (b.y - a.y) / len};
        for (i64 t = 0; t <= len; ++t) {
            LatticePoint p{a.x + t * step.x, a.y + t * step.y};
            if (f.coeff(p) != Rat(binomial(len, t))) return false;
        }
    }
    return true;
}

// Basket comparison as multisets (the stored basket is a canonical cyclic
// rotation; invariance statements only promise multiset equality).
inline bool same_content_multiset(const SingularityContent& a,
                                  const SingularityContent& b) {
    if (a.t_cones != b.t_cones) return false;
    std::vector<RCone> x = a.basket, y = b.basket;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
}

} // namespace testsupport
