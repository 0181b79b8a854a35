#include "tpoly/rootlattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>

#include "tpoly/errors.hpp"

namespace tpoly {

namespace {

void check_vector_rank(const GramLattice& L, const LatticeVec& v) {
    if (v.size() != L.rank())
        fail(Errc::invalid_argument, "vector length does not match lattice rank",
             static_cast<long long>(v.size()));
}

bool is_i1n(const GramLattice& L) {
    std::size_t m = L.rank();
    if (m < 2) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (L.gram[i].size() != m) return false;
        for (std::size_t j = 0; j < m; ++j) {
            i64 want = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (L.gram[i][j] != want) return false;
        }
    }
    return true;
}

LatticeVec vec_add(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

LatticeVec vec_sub(const LatticeVec& a, const LatticeVec& b) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

LatticeVec vec_scale(i64 c, const LatticeVec& a) {
    LatticeVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

// Recursively fills positions i..n-1 of the e_1..e_n part with integers whose
// remaining sum and sum of squares are the given values.
void fill_tail(std::size_t i, std::size_t n, i64 rem_sum, i64 rem_sq,
               LatticeVec& cur, std::vector<LatticeVec>& out) {
    std::size_t left = n - i;
    if (left == 0) {
        if (rem_sum == 0 && rem_sq == 0) out.push_back(cur);
        return;
    }
    // Cauchy-Schwarz feasibility: rem_sum^2 <= left * rem_sq.
    if (rem_sum * rem_sum > static_cast<i64>(left) * rem_sq) return;
    i64 lim = 0;
    while ((lim + 1) * (lim + 1) <= rem_sq) ++lim;
    for (i64 a = -lim; a <= lim; ++a) {
        cur[1 + i] = a;
        fill_tail(i + 1, n, rem_sum - a, rem_sq - a * a, cur, out);
    }
    cur[1 + i] = 0;
}

// Root basis built from the standard basis e_0..e_n of I_{1,n}.
std::vector<LatticeVec> standard_root_basis(std::size_t n) {
    std::vector<LatticeVec> ortho;
    for (std::size_t i = 0; i <= n; ++i) {
        LatticeVec e(n + 1, 0);
        e[i] = 1;
        ortho.push_back(e);
    }
    return canonical_root_basis(ortho);
}

// Expected Gram value between root-basis members i and j of E_n (or the
// affine extension when n = 9): -2 on the diagonal, 1 for chain neighbours
// and for the (0,3) attachment, 0 otherwise.
i64 diagram_pairing(std::size_t i, std::size_t j) {
    if (i == j) return -2;
    if (i > j) std::swap(i, j);
    if (i >= 1 && j == i + 1) return 1;
    if (i == 0 && j == 3) return 1;
    return 0;
}

} // namespace

GramLattice make_i1n(std::size_t n) {
    if (n < 1) fail(Errc::invalid_argument, "signature (1,n) needs n >= 1",
                    static_cast<long long>(n));
    GramLattice L;
    L.gram.assign(n + 1, std::vector<i64>(n + 1, 0));
    L.gram[0][0] = 1;
    for (std::size_t i = 1; i <= n; ++i) L.gram[i][i] = -1;
    return L;
}

i64 pairing(const GramLattice& L, const LatticeVec& a, const LatticeVec& b) {
    check_vector_rank(L, a);
    check_vector_rank(L, b);
    i64 s = 0;
    for (std::size_t i = 0; i < L.rank(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < L.rank(); ++j)
            s += a[i] * L.gram[i][j] * b[j];
    }
    return s;
}

LatticeVec canonical_vector(std::size_t n) {
    LatticeVec k(n + 1, 1);
    k[0] = -3;
    return k;
}

std::vector<LatticeVec> en_roots(std::size_t n) {
    if (n < 3 || n > 8)
        fail(Errc::invalid_argument, "root enumeration defined for 3 <= n <= 8",
             static_cast<long long>(n));
    // A root d e_0 + sum a_i e_i satisfies sum a_i = -3d (orthogonality to
    // k_n) and sum a_i^2 = d^2 + 2 (self-pairing -2); Cauchy-Schwarz then
    // bounds (9 - n) d^2 <= 2n, so the loop below covers every candidate.
    std::vector<LatticeVec> out;
    i64 dlim = 0;
    while (static_cast<i64>(9 - n) * (dlim + 1) * (dlim + 1) <= 2 * static_cast<i64>(n))
        ++dlim;
    LatticeVec cur(n + 1, 0);
    for (i64 d = -dlim; d <= dlim; ++d) {
        cur[0] = d;
        fill_tail(0, n, -3 * d, d * d + 2, cur, out);
    }
    return out;
}

std::vector<LatticeVec> canonical_root_basis(const std::vector<LatticeVec>& ortho) {
    std::size_t m = ortho.size();
    if (m < 4)
        fail(Errc::not_orthonormal_basis, "need at least four basis vectors",
             static_cast<long long>(m));
    std::size_t n = m - 1;
    for (const LatticeVec& v : ortho)
        if (v.size() != m)
            fail(Errc::not_orthonormal_basis,
                 "vector length does not match basis size",
                 static_cast<long long>(v.size()));
    GramLattice L = make_i1n(n);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i; j < m; ++j) {
            i64 want = (i != j) ? 0 : (i == 0 ? 1 : -1);
            if (pairing(L, ortho[i], ortho[j]) != want)
                fail(Errc::not_orthonormal_basis,
                     "pairing of basis vectors " + std::to_string(i) + "," +
                         std::to_string(j) + " is off",
                     pairing(L, ortho[i], ortho[j]));
        }
    LatticeVec combo = vec_scale(-3, ortho[0]);
    for (std::size_t i = 1; i <= n; ++i) combo = vec_add(combo, ortho[i]);
    if (combo != canonical_vector(n))
        fail(Errc::wrong_canonical_class, "-3 v_0 + sum v_i is not k_n");

    std::vector<LatticeVec> basis;
    basis.push_back(vec_sub(vec_sub(vec_sub(ortho[0], ortho[1]), ortho[2]), ortho[3]));
    for (std::size_t i = 1; i + 1 <= n; ++i)
        basis.push_back(vec_sub(ortho[i], ortho[i + 1]));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j)
            if (pairing(L, basis[i], basis[j]) != diagram_pairing(i, j))
                fail(Errc::internal, "root basis diagram check failed");
    return basis;
}

LatticeVec weyl_reflect(const GramLattice& L, const LatticeVec& alpha,
                        const LatticeVec& beta) {
    check_vector_rank(L, alpha);
    check_vector_rank(L, beta);
    i64 a2 = pairing(L, alpha, alpha);
    if (a2 != -2)
        fail(Errc::not_a_root, "reflection vector has self-pairing " + std::to_string(a2),
             a2);
    return vec_add(beta, vec_scale(pairing(L, beta, alpha), alpha));
}

LatticeVec highest_root(const std::vector<LatticeVec>& basis) {
    if (basis.size() != 8)
        fail(Errc::not_e8_basis, "need exactly eight basis vectors",
             static_cast<long long>(basis.size()));
    std::size_t width = basis[0].size();
    if (width < 9)
        fail(Errc::not_e8_basis, "ambient rank too small for E8",
             static_cast<long long>(width));
    for (const LatticeVec& v : basis)
        if (v.size() != width)
            fail(Errc::not_e8_basis, "basis vectors have mixed lengths",
                 static_cast<long long>(v.size()));
    GramLattice L = make_i1n(width - 1);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i; j < 8; ++j)
            if (pairing(L, basis[i], basis[j]) != diagram_pairing(i, j))
                fail(Errc::not_e8_basis,
                     "Gram pattern is not the E8 diagram at " + std::to_string(i) +
                         "," + std::to_string(j),
                     pairing(L, basis[i], basis[j]));
    static const i64 coeff[8] = {3, 2, 4, 6, 5, 4, 3, 2};
    LatticeVec r(width, 0);
    for (std::size_t i = 0; i < 8; ++i) r = vec_add(r, vec_scale(coeff[i], basis[i]));
    return r;
}

std::vector<i64> root_basis_coords(const LatticeVec& c,
                                   const std::vector<LatticeVec>& basis) {
    if (c.size() < 2 || basis.empty())
        fail(Errc::invalid_argument, "empty vector or basis");
    std::size_t width = c.size();
    std::size_t n = width - 1;
    for (const LatticeVec& b : basis)
        if (b.size() != width)
            fail(Errc::invalid_argument, "basis vector length mismatch",
                 static_cast<long long>(b.size()));
    GramLattice L = make_i1n(n);
    i64 pk = pairing(L, c, canonical_vector(n));
    if (pk != 0)
        fail(Errc::not_in_root_lattice,
             "vector pairs with k_n as " + std::to_string(pk), pk);
    LinearSystem sys(basis.size());
    for (std::size_t row = 0; row < width; ++row) {
        std::vector<Rat> coeffs(basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            coeffs[j] = Rat(basis[j][row]);
        sys.add_equation(coeffs, Rat(c[row]));
    }
    if (!sys.consistent())
        fail(Errc::not_in_root_lattice, "vector lies outside the basis span");
    if (sys.solution_dim() != 0)
        fail(Errc::invalid_argument, "basis is not linearly independent",
             static_cast<long long>(sys.solution_dim()));
    std::vector<Rat> sol = sys.solve_unique();
    std::vector<i64> coords(sol.size());
    for (std::size_t j = 0; j < sol.size(); ++j) {
        if (sol[j].get_den() != 1)
            fail(Errc::not_in_root_lattice,
                 "coordinate " + std::to_string(j) + " is not an integer");
        coords[j] = sol[j].get_num().get_si();
    }
    return coords;
}

std::string sublattice_label(std::size_t rank, bool primitive) {
    if (rank > 8)
        fail(Errc::invalid_argument, "sublattice rank exceeds 8",
             static_cast<long long>(rank));
    if (rank == 7 && !primitive) return "r7-imprimitive";
    return "r" + std::to_string(rank);
}

RootSublatticeClass classify_boundary(const std::vector<LatticeVec>& cycle,
                                      const GramLattice& ambient) {
    if (!is_i1n(ambient) || ambient.rank() != 10)
        fail(Errc::invalid_argument, "ambient lattice must be I_{1,9}",
             static_cast<long long>(ambient.rank()));
    if (cycle.empty()) fail(Errc::invalid_argument, "empty boundary cycle");
    for (const LatticeVec& d : cycle) check_vector_rank(ambient, d);
    std::size_t r = cycle.size() - 1;

    LatticeVec anti = vec_scale(-1, canonical_vector(9));
    if (r == 0) {
        if (cycle[0] != anti)
            fail(Errc::not_anticanonical, "single component must be -k_9");
    } else {
        for (std::size_t i = 0; i <= r; ++i) {
            i64 self = pairing(ambient, cycle[i], cycle[i]);
            if (self != -2)
                fail(Errc::not_neg_two_class,
                     "component " + std::to_string(i) + " has self-pairing " +
                         std::to_string(self),
                     self);
        }
        LatticeVec total(10, 0);
        for (const LatticeVec& d : cycle) total = vec_add(total, d);
        if (total != anti)
            fail(Errc::not_anticanonical, "components do not sum to -k_9");
        if (r == 1) {
            i64 p = pairing(ambient, cycle[0], cycle[1]);
            if (p != 2)
                fail(Errc::bad_intersection_pattern,
                     "two components must meet with pairing 2", p);
        } else {
            for (std::size_t i = 0; i <= r; ++i)
                for (std::size_t j = i + 1; j <= r; ++j) {
                    bool adjacent = (j == i + 1) || (i == 0 && j == r);
                    i64 want = adjacent ? 1 : 0;
                    i64 got = pairing(ambient, cycle[i], cycle[j]);
                    if (got != want)
                        fail(Errc::bad_intersection_pattern,
                             "pairing of components " + std::to_string(i) + "," +
                                 std::to_string(j) + " is " + std::to_string(got) +
                                 ", expected " + std::to_string(want),
                             got);
                }
        }
    }

    std::vector<LatticeVec> beta = standard_root_basis(9);
    std::vector<i64> anti_coords = root_basis_coords(anti, beta);
    if (anti_coords.back() != 1)
        fail(Errc::internal, "anticanonical class must have last coordinate 1");

    std::vector<std::vector<Int>> mat;
    for (const LatticeVec& d : cycle) {
        std::vector<i64> x = root_basis_coords(d, beta);
        i64 m = x.back();
        std::vector<Int> row(8);
        for (std::size_t j = 0; j < 8; ++j) row[j] = x[j] - m * anti_coords[j];
        mat.push_back(std::move(row));
    }
    std::vector<Int> divisors = smith_divisors(mat);
    RootSublatticeClass cls;
    cls.rank = divisors.size();
    cls.primitive = std::all_of(divisors.begin(), divisors.end(),
                                [](const Int& d) { return d == 1; });
    cls.label = sublattice_label(cls.rank, cls.primitive);
    return cls;
}

std::vector<std::vector<LatticeVec>> rank7_cycle_representatives() {
    GramLattice L = make_i1n(9);

    // Candidate classes: e_0 - e_a - e_b - e_c (degree one) and e_a - e_b
    // (degree zero), both with self-pairing -2.
    std::vector<LatticeVec> triples, pairs;
    for (std::size_t a = 1; a <= 9; ++a)
        for (std::size_t b = a + 1; b <= 9; ++b)
            for (std::size_t c = b + 1; c <= 9; ++c) {
                LatticeVec v(10, 0);
                v[0] = 1;
                v[a] = v[b] = v[c] = -1;
                triples.push_back(v);
            }
    for (std::size_t a = 1; a <= 9; ++a)
        for (std::size_t b = 1; b <= 9; ++b) {
            if (a == b) continue;
            LatticeVec v(10, 0);
            v[a] = 1;
            v[b] = -1;
            pairs.push_back(v);
        }

    LatticeVec anti = vec_scale(-1, canonical_vector(9));

    std::map<std::string, std::vector<LatticeVec>> found;
    auto record = [&](const std::vector<LatticeVec>& cycle) {
        RootSublatticeClass cls = classify_boundary(cycle, L);
        if (cls.rank == 7) found.emplace(cls.label, cycle);
    };

    // Seed: a cycle whose first component has degree three.
    {
        LatticeVec d0(10, 0);
        d0[0] = 3;
        d0[1] = -2;
        for (std::size_t i = 2; i <= 7; ++i) d0[i] = -1;
        d0[9] = -1;
        std::vector<LatticeVec> cycle{d0};
        for (std::size_t i = 1; i <= 7; ++i) {
            LatticeVec v(10, 0);
            v[i] = 1;
            v[i + 1] = -1;
            cycle.push_back(v);
        }
        record(cycle);
    }

    // Depth-first search over 8-cycles with exactly three degree-one
    // components; by relabeling, the first component is e_0 - e_1 - e_2 - e_3.
    std::vector<LatticeVec> cycle;
    {
        LatticeVec d0(10, 0);
        d0[0] = 1;
        d0[1] = d0[2] = d0[3] = -1;
        cycle.push_back(d0);
    }
    LatticeVec sum = cycle[0];

    auto fits = [&](const LatticeVec& cand) {
        std::size_t pos = cycle.size();
        for (std::size_t j = 0; j < pos; ++j) {
            bool adjacent = (j + 1 == pos) || (j == 0 && pos == 7);
            if (pairing(L, cycle[j], cand) != (adjacent ? 1 : 0)) return false;
        }
        return true;
    };

    std::function<void(std::size_t, std::size_t)> dfs =
        [&](std::size_t pos, std::size_t triples_used) {
            if (found.size() == 2) return;
            if (pos == 8) {
                if (sum == anti) record(cycle);
                return;
            }
            std::size_t slots_left = 8 - pos;
            if (3 - triples_used > slots_left) return;
            auto try_cand = [&](const LatticeVec& cand, bool is_triple) {
                if (found.size() == 2) return;
                if (!fits(cand)) return;
                cycle.push_back(cand);
                sum = vec_add(sum, cand);
                dfs(pos + 1, triples_used + (is_triple ? 1 : 0));
                sum = vec_sub(sum, cycle.back());
                cycle.pop_back();
            };
            if (triples_used < 3)
                for (const LatticeVec& t : triples) try_cand(t, true);
            for (const LatticeVec& p : pairs) try_cand(p, false);
        };
    dfs(1, 1);

    std::vector<std::vector<LatticeVec>> out;
    if (auto it = found.find("r7"); it != found.end()) out.push_back(it->second);
    if (auto it = found.find("r7-imprimitive"); it != found.end())
        out.push_back(it->second);
    return out;
}

} // namespace tpoly
