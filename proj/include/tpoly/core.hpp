#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "tpoly/errors.hpp"

namespace tpoly {

using Int = mpz_class;  // arbitrary-precision integer
using Rat = mpq_class;  // arbitrary-precision rational, always canonicalized

// `long` rather than `long long`: gmpxx provides constructors and operators
// for `long` only, and the two are the same width here.
using i64 = long;
static_assert(sizeof(long) == 8, "i64 must be 64 bits wide");

// ---------------------------------------------------------------------------
// Planar lattice points
// ---------------------------------------------------------------------------

struct LatticePoint {
    i64 x = 0;
    i64 y = 0;

    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
    // Lexicographic order: by x, then y.  This is the order used everywhere a
    // "lexicographically smallest vertex" or term order is required.
    friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
        if (auto c = a.x <=> b.x; c != 0) return c;
        return a.y <=> b.y;
    }

    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
    LatticePoint operator-() const { return {-x, -y}; }
    LatticePoint operator*(i64 s) const { return {x * s, y * s}; }
};

inline i64 dot(const LatticePoint& a, const LatticePoint& b) { return a.x * b.x + a.y * b.y; }
inline i64 cross(const LatticePoint& a, const LatticePoint& b) { return a.x * b.y - a.y * b.x; }

inline i64 gcd_ll(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

inline bool is_primitive(const LatticePoint& p) { return gcd_ll(p.x, p.y) == 1; }

// Divides out the content; the zero vector is rejected.
inline LatticePoint primitive(const LatticePoint& p) {
    i64 g = gcd_ll(p.x, p.y);
    if (g == 0) fail(Errc::invalid_argument, "primitive direction of the zero vector");
    return {p.x / g, p.y / g};
}

// Counterclockwise rotation by 90 degrees.
inline LatticePoint rot90(const LatticePoint& p) { return {-p.y, p.x}; }

std::string to_string(const LatticePoint& p);

// Extended gcd: returns g = gcd(a,b) and x,y with a*x + b*y = g.
i64 ext_gcd(i64 a, i64 b, i64& x, i64& y);

// Some lattice point u0 with <u0, v> = 1 (v must be primitive).
LatticePoint dual_partner(const LatticePoint& v);

// ---------------------------------------------------------------------------
// Exact rational linear algebra (small dense systems)
// ---------------------------------------------------------------------------

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const std::vector<Rat>& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

// Incrementally row-reduced homogeneous/inhomogeneous system over the
// rationals: rows are (coefficients | rhs).  Rank queries and unique-solution
// extraction are exact.
class LinearSystem {
public:
    explicit LinearSystem(std::size_t unknowns) : n_(unknowns) {}

    std::size_t unknowns() const { return n_; }
    // Adds one equation sum_j coeffs[j] * x_j = rhs.  Returns true if the
    // equation was independent of the rows already present.
    bool add_equation(const std::vector<Rat>& coeffs, const Rat& rhs);
    bool consistent() const { return consistent_; }
    std::size_t rank() const { return pivot_col_.size(); }
    // Dimension of the affine solution space (unknowns - rank), meaningful
    // only while consistent().
    std::size_t solution_dim() const { return n_ - rank(); }
    // Unique solution; requires consistent() and solution_dim() == 0.
    std::vector<Rat> solve_unique() const;

private:
    std::size_t n_;
    bool consistent_ = true;
    std::vector<std::vector<Rat>> rows_;  // reduced rows, size n_+1 each
    std::vector<std::size_t> pivot_col_;
};

// Smith normal form over the integers for small dense matrices.  Returns the
// elementary divisors d_1 | d_2 | ... (nonzero ones only, in order).
std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m);

// Convenience: rank of an integer matrix (number of nonzero divisors).
std::size_t integer_rank(const std::vector<std::vector<Int>>& m);

// ---------------------------------------------------------------------------
// Factorials and binomials over Int
// ---------------------------------------------------------------------------

Int factorial(i64 n);
Int binomial(i64 n, i64 k);

} // namespace tpoly
