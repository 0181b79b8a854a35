#include "tpoly/core.hpp"

#include <algorithm>
#include <sstream>

#include "tpoly/errors.hpp"

namespace tpoly {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::not_convex: return "NotConvex";
        case Errc::origin_not_interior: return "OriginNotInterior";
        case Errc::non_primitive_vertex: return "NonPrimitiveVertex";
        case Errc::not_mutable: return "NotMutable";
        case Errc::syntax_error: return "SyntaxError";
        case Errc::not_t_polygon: return "NotTPolygon";
        case Errc::non_unique_solution: return "NonUniqueSolution";
        case Errc::inconsistent_constraints: return "InconsistentConstraints";
        case Errc::not_a_root: return "NotARoot";
        case Errc::not_orthonormal_basis: return "NotOrthonormalBasis";
        case Errc::wrong_canonical_class: return "WrongCanonicalClass";
        case Errc::not_e8_basis: return "NotE8Basis";
        case Errc::not_in_root_lattice: return "NotInRootLattice";
        case Errc::not_anticanonical: return "NotAnticanonical";
        case Errc::bad_intersection_pattern: return "BadIntersectionPattern";
        case Errc::not_neg_two_class: return "NotNegTwoClass";
        case Errc::no_match: return "NoMatch";
        case Errc::unknown_id: return "UnknownId";
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const LatticePoint& p) {
    std::ostringstream os;
    os << '(' << p.x << ',' << p.y << ')';
    return os.str();
}

i64 ext_gcd(i64 a, i64 b, i64& x, i64& y) {
    // Invariant: r0 = s0*a + t0*b, r1 = s1*a + t1*b.
    i64 r0 = a, r1 = b;
    i64 s0 = 1, s1 = 0;
    i64 t0 = 0, t1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1; std::swap(r0, r1);
        s0 -= q * s1; std::swap(s0, s1);
        t0 -= q * t1; std::swap(t0, t1);
    }
    if (r0 < 0) { r0 = -r0; s0 = -s0; t0 = -t0; }
    x = s0;
    y = t0;
    return r0;
}

LatticePoint dual_partner(const LatticePoint& v) {
    if (!is_primitive(v))
        fail(Errc::invalid_argument, "dual partner requires a primitive vector");
    i64 s = 0, t = 0;
    ext_gcd(v.x, v.y, s, t);
    // <(s,t), (x,y)> = s*x + t*y = 1.
    return {s, t};
}

void RatMatrix::append_row(const std::vector<Rat>& row) {
    if (row.size() != cols_)
        fail(Errc::internal, "appended row has wrong width");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

// ---------------------------------------------------------------------------
// LinearSystem: each stored row is fully reduced (coefficients | rhs, length
// n_+1) with a leading 1 in its pivot column and zeros in every other row's
// pivot column.

bool LinearSystem::add_equation(const std::vector<Rat>& coeffs, const Rat& rhs) {
    if (coeffs.size() != n_)
        fail(Errc::internal, "equation has wrong number of coefficients");
    std::vector<Rat> row(coeffs);
    row.push_back(rhs);
    // Eliminate existing pivots.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = row[pivot_col_[r]];
        if (f == 0) continue;
        Rat factor = f;
        for (std::size_t j = 0; j <= n_; ++j)
            row[j] -= factor * rows_[r][j];
    }
    std::size_t lead = n_;
    for (std::size_t c = 0; c < n_; ++c)
        if (row[c] != 0) { lead = c; break; }
    if (lead == n_) {
        if (row[n_] != 0) consistent_ = false;
        return false;
    }
    Rat inv = row[lead];
    for (std::size_t j = 0; j <= n_; ++j) row[j] /= inv;
    // Eliminate the new pivot from the stored rows.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rat& f = rows_[r][lead];
        if (f == 0) continue;
        Rat factor = f;
        for (std::size_t j = 0; j <= n_; ++j)
            rows_[r][j] -= factor * row[j];
    }
    rows_.push_back(std::move(row));
    pivot_col_.push_back(lead);
    return true;
}

std::vector<Rat> LinearSystem::solve_unique() const {
    if (!consistent_)
        fail(Errc::inconsistent_constraints, "linear system has no solution");
    if (rank() != n_)
        fail(Errc::non_unique_solution, "linear system is underdetermined",
             static_cast<long long>(solution_dim()));
    std::vector<Rat> x(n_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        x[pivot_col_[r]] = rows_[r][n_];
    return x;
}

// ---------------------------------------------------------------------------
// Smith normal form over the integers (divisors only).

namespace {

using IMat = std::vector<std::vector<Int>>;

bool find_nonzero(const IMat& m, std::size_t from, std::size_t& ri, std::size_t& ci) {
    for (std::size_t r = from; r < m.size(); ++r)
        for (std::size_t c = from; c < m[r].size(); ++c)
            if (m[r][c] != 0) { ri = r; ci = c; return true; }
    return false;
}

} // namespace

std::vector<Int> smith_divisors(std::vector<std::vector<Int>> m) {
    std::vector<Int> divisors;
    if (m.empty() || m[0].empty()) return divisors;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t k = 0;
    while (k < rows && k < cols) {
        std::size_t ri = 0, ci = 0;
        if (!find_nonzero(m, k, ri, ci)) break;
        std::swap(m[k], m[ri]);
        for (auto& row : m) std::swap(row[k], row[ci]);
        // Clear row and column k by repeated remainder reduction.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t r = k + 1; r < rows; ++r) {
                if (m[r][k] == 0) continue;
                Int q = m[r][k] / m[k][k];
                for (std::size_t c = k; c < cols; ++c) m[r][c] -= q * m[k][c];
                if (m[r][k] != 0) { std::swap(m[k], m[r]); dirty = true; }
            }
            for (std::size_t c = k + 1; c < cols; ++c) {
                if (m[k][c] == 0) continue;
                Int q = m[k][c] / m[k][k];
                for (std::size_t r = k; r < rows; ++r) m[r][c] -= q * m[r][k];
                if (m[k][c] != 0) {
                    for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][k], m[r][c]);
                    dirty = true;
                }
            }
        }
        if (m[k][k] < 0)
            for (std::size_t c = k; c < cols; ++c) m[k][c] = -m[k][c];
        ++k;
    }
    for (std::size_t i = 0; i < k; ++i)
        divisors.push_back(m[i][i]);
    // Enforce the divisibility chain d_i | d_{i+1}.
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
        for (std::size_t j = i + 1; j < divisors.size(); ++j) {
            if (divisors[j] % divisors[i] == 0) continue;
            Int g = gcd(divisors[i], divisors[j]);
            Int l = divisors[i] / g * divisors[j];
            divisors[i] = g;
            divisors[j] = l;
        }
    }
    return divisors;
}

std::size_t integer_rank(const std::vector<std::vector<Int>>& m) {
    return smith_divisors(m).size();
}

Int factorial(i64 n) {
    if (n < 0) fail(Errc::invalid_argument, "factorial of a negative integer");
    Int r = 1;
    for (i64 i = 2; i <= n; ++i) r *= i;
    return r;
}

Int binomial(i64 n, i64 k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (i64 i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

} // namespace tpoly
