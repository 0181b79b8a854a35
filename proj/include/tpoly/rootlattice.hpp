#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tpoly/core.hpp"

namespace tpoly {

// Vector in I_{1,n}, written in e-basis coordinates (e_0, e_1, ..., e_n).
using LatticeVec = std::vector<i64>;

// Lattice with a symmetric integer Gram matrix; vectors are coordinate rows.
struct GramLattice {
    std::vector<std::vector<i64>> gram;
    std::size_t rank() const { return gram.size(); }
};

// The odd unimodular lattice of signature (1, n): Gram diag(1, -1, ..., -1).
GramLattice make_i1n(std::size_t n);

i64 pairing(const GramLattice& L, const LatticeVec& a, const LatticeVec& b);

// k_n = -3 e_0 + e_1 + ... + e_n in I_{1,n} coordinates.
LatticeVec canonical_vector(std::size_t n);

// All roots of E_n = (Z k_n)^perp in I_{1,n} (3 <= n <= 8): the vectors with
// self-pairing -2 orthogonal to k_n, enumerated exactly once.  E8 has 240.
std::vector<LatticeVec> en_roots(std::size_t n);

// Root basis attached to an orthogonal basis v_0..v_n of I_{1,n} satisfying
// v_0^2 = 1, v_i^2 = -1, v_i.v_j = 0 and -3 v_0 + sum v_i = k_n:
//   b_0 = v_0 - v_1 - v_2 - v_3,   b_i = v_i - v_{i+1}  (1 <= i <= n-1).
// The diagram is the chain b_1 .. b_{n-1} with b_0 attached at b_3.
// Errors: not_orthonormal_basis (Gram values wrong), wrong_canonical_class
// (-3 v_0 + sum v_i != k_n).
std::vector<LatticeVec> canonical_root_basis(const std::vector<LatticeVec>& ortho);

// Reflection s_alpha(beta) = beta + (beta . alpha) alpha for a root alpha
// (self-pairing -2).  Errors: not_a_root.
LatticeVec weyl_reflect(const GramLattice& L, const LatticeVec& alpha,
                        const LatticeVec& beta);

// Highest root 3b_0 + 2b_1 + 4b_2 + 6b_3 + 5b_4 + 4b_5 + 3b_6 + 2b_7 of an
// E8 canonical root basis (8 vectors with the E8 diagram Gram pattern).
// Errors: not_e8_basis.
LatticeVec highest_root(const std::vector<LatticeVec>& basis);

// Integer coordinates of c in a canonical root basis of E_n; defined exactly
// when c is orthogonal to k_n (the basis spans that whole sublattice).
// Errors: not_in_root_lattice.
std::vector<i64> root_basis_coords(const LatticeVec& c,
                                   const std::vector<LatticeVec>& basis);

// Classification of the sublattice spanned by a boundary cycle in I_{1,9}.
// Exactly 10 labels occur: "r0".."r8" plus "r7-imprimitive" ("r7" denotes the
// primitive rank-7 embedding; ranks other than 7 have a single class each).
struct RootSublatticeClass {
    std::size_t rank = 0;  // 0..8
    bool primitive = true; // saturation index 1 (all Smith divisors equal 1)
    std::string label;
    friend bool operator==(const RootSublatticeClass&, const RootSublatticeClass&) = default;
};

std::string sublattice_label(std::size_t rank, bool primitive);

// Classifies a cycle of classes D_0..D_r in ambient = I_{1,9}:
// validates D_i^2 = -2 (for r >= 1), sum D_i = -k_9, and the intersection
// pattern
//   r >= 2: D_i . D_{i+1} = 1 cyclically, all other distinct pairs 0;
//   r == 1: D_0 . D_1 = 2;
//   r == 0: D_0 = -k_9 alone.
// Each D_i is expanded over the root basis built from the standard e-basis,
// reduced modulo the span of k_9 (which kills the ninth coordinate), and the
// resulting (r+1) x 8 integer matrix yields rank and primitivity through its
// Smith divisors.
// Errors: not_neg_two_class, not_anticanonical, bad_intersection_pattern,
// not_in_root_lattice, invalid_argument (ambient is not I_{1,9}).
RootSublatticeClass classify_boundary(const std::vector<LatticeVec>& cycle,
                                      const GramLattice& ambient);

// Search over anticanonical 8-cycles in I_{1,9} assembled from classes
// e_0 - e_a - e_b - e_c and e_a - e_b (plus one seeded cycle with a degree-3
// component); returns one representative cycle per distinct rank-7 class
// found (expected: exactly two, split by primitivity, primitive first).
std::vector<std::vector<LatticeVec>> rank7_cycle_representatives();

} // namespace tpoly
