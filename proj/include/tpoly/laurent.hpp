#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tpoly/core.hpp"
#include "tpoly/polygon.hpp"

namespace tpoly {

// Laurent polynomial in two variables with exact rational coefficients.
// Invariant: no stored coefficient is zero; terms are kept in lexicographic
// exponent order, which fixes the printed form.
class LaurentPoly {
public:
    using TermMap = std::map<LatticePoint, Rat>;

    LaurentPoly() = default;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rat coeff(const LatticePoint& e) const;
    // Adds c * x^e, erasing the term if the sum cancels.
    void add_term(const LatticePoint& e, const Rat& c);
    void set_term(const LatticePoint& e, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& s) const;

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    static LaurentPoly monomial(const LatticePoint& e, const Rat& c = 1);

private:
    TermMap terms_;
};

// Parses the grammar
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := coefficient ['*' monomial] | monomial
//   coeff    := integer ['/' integer]
//   monomial := factor ['*' factor] ; factor := ('x'|'y') ['^' ['-'] integer] | '1'
// with each variable appearing at most once per monomial.  Errors with
// syntax_error; detail = byte offset of the offending character.
LaurentPoly parse_laurent(const std::string& text);

// Canonical rendering in the same grammar, terms in lexicographic exponent
// order; parse_laurent(to_string(f)) == f.
std::string to_string(const LaurentPoly& f);

// Convex hull of the support, ccw from the lexicographically smallest point.
// Degenerate hulls (point, segment) are returned as-is; the zero polynomial
// is rejected with invalid_argument.
std::vector<LatticePoint> support_hull(const LaurentPoly& f);

// Newton polygon as a validated Fano polygon (errors propagate from
// validate_fano: not_convex when the support is not full-dimensional, etc).
FanoPolygon newton_polygon(const LaurentPoly& f);

// Classical period coefficients c_d = const(f^d) for d = 0..horizon.
std::vector<Rat> period_coefficients(const LaurentPoly& f, std::size_t horizon);

// First 1 + horizon period coefficients; c_0 is always 1.
struct PeriodFingerprint {
    std::vector<Rat> coeffs;
    std::size_t horizon = 0;
    friend bool operator==(const PeriodFingerprint&, const PeriodFingerprint&) = default;
};

PeriodFingerprint period_fingerprint(const LaurentPoly& f, std::size_t horizon);

// (1 + x^w)^k, the algebraic factor of the mutation with data (v, w, k).
LaurentPoly binomial_factor(const LatticePoint& w, i64 k);

// The algebraic mutation x^m -> x^m * F^{<m,v>}: each slice of f at
// v-height h is multiplied by F^h, dividing exactly for h < 0.  F must be
// supported on the annihilator of v.  Errors: not_mutable with detail = the
// height whose slice F^{-h} fails to divide.
LaurentPoly algebraic_mutation(const LaurentPoly& f, const LatticePoint& v,
                               const LaurentPoly& F);

// Applies the unimodular substitution x^e -> x^(U e) (U given by columns
// acting on exponents).
LaurentPoly apply_unimodular(const LaurentPoly& f, const LatticePoint& col_x,
                             const LatticePoint& col_y);

// Canonical representative of f under unimodular monomial substitutions:
// minimizes the (exponent, coefficient) term sequence over the same
// edge-anchored family used by the polygon normal form.
LaurentPoly laurent_canonical(const LaurentPoly& f);

// Bounded search for a chain of algebraic mutations carrying f to g up to
// unimodular monomial substitution.  Empty chain means f and g are already
// equivalent by substitution alone.
struct LaurentChainResult {
    bool found = false;
    bool truncated = false;
    std::vector<MutationData> chain;
};

LaurentChainResult mutation_equivalent_laurent(const LaurentPoly& f, const LaurentPoly& g,
                                               std::size_t max_nodes, std::size_t max_depth);

} // namespace tpoly
