#include "tpoly/mmlp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "tpoly/errors.hpp"

namespace tpoly {

namespace {

// Laurent polynomial whose coefficients are affine forms c0 + sum a_i * u_i
// in the unknown interior coefficients u_i.  Row layout: [c0, a_1..a_n].
using Row = std::vector<Rat>;

struct AffinePoly {
    std::map<LatticePoint, Row> terms;
    std::size_t width = 1; // row length

    void add(const LatticePoint& e, const Row& row);
};

bool row_zero(const Row& r) {
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x == 0; });
}

void AffinePoly::add(const LatticePoint& e, const Row& row) {
    if (row_zero(row)) return;
    auto [it, inserted] = terms.emplace(e, row);
    if (inserted) return;
    for (std::size_t i = 0; i < width; ++i) it->second[i] += row[i];
    if (row_zero(it->second)) terms.erase(it);
}

// Records remainder-vanishing equations; returns whether the system is still
// consistent (callers keep going regardless and report at the end).
void emit_equation(LinearSystem& sys, const Row& row) {
    std::vector<Rat> coeffs(row.begin() + 1, row.end());
    sys.add_equation(coeffs, -row[0]);
}

// Divides the u-height slice rows (dense along w, base exponent `base`) by a
// numeric univariate polynomial b (monic at the top), emitting remainder
// equations into sys.  Returns the quotient as exponent->row terms.
void divide_rows(std::vector<Row> a, const LatticePoint& base, const LatticePoint& w,
                 const std::vector<Rat>& b, LinearSystem& sys, AffinePoly& out) {
    const std::size_t width = a.empty() ? 1 : a[0].size();
    if (a.size() < b.size()) {
        for (auto& row : a)
            if (!row_zero(row)) emit_equation(sys, row);
        return;
    }
    const std::size_t qn = a.size() - b.size() + 1;
    for (std::size_t i = qn; i-- > 0;) {
        Row lead = a[i + b.size() - 1];
        for (Rat& x : lead) x /= b.back();
        if (!row_zero(lead))
            for (std::size_t j = 0; j < b.size(); ++j)
                for (std::size_t t = 0; t < width; ++t) a[i + j][t] -= lead[t] * b[j];
        out.add(base + w * static_cast<i64>(i), lead);
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i)
        if (!row_zero(a[i])) emit_equation(sys, a[i]);
}

// (1 + s)^n as a dense coefficient vector.
std::vector<Rat> binomial_vector(i64 n) {
    std::vector<Rat> b(static_cast<std::size_t>(n) + 1);
    for (i64 j = 0; j <= n; ++j) b[static_cast<std::size_t>(j)] = Rat(binomial(n, j));
    return b;
}

// Extracts the dense row vector of the slice {<m,v> = h} of g along step w,
// measured by tau = <m, c>.  Returns false when the slice is empty.
bool slice_rows(const AffinePoly& g, const LatticePoint& v, i64 h, const LatticePoint& c,
                const LatticePoint& w, std::vector<Row>& rows, LatticePoint& base) {
    i64 tmin = 0, tmax = 0;
    bool any = false;
    for (const auto& [e, row] : g.terms) {
        if (dot(e, v) != h) continue;
        const i64 t = dot(e, c);
        if (!any) { tmin = tmax = t; base = e; any = true; }
        if (t < tmin) { tmin = t; base = e; }
        tmax = std::max(tmax, t);
    }
    if (!any) return false;
    rows.assign(static_cast<std::size_t>(tmax - tmin) + 1, Row(g.width, Rat(0)));
    for (const auto& [e, row] : g.terms) {
        if (dot(e, v) != h) continue;
        rows[static_cast<std::size_t>(dot(e, c) - tmin)] = row;
    }
    return true;
}

// Edge divisibility constraints of the maximally-mutable condition on the
// polygon Q for the transported form g.
void edge_constraints(const FanoPolygon& Q, const AffinePoly& g, LinearSystem& sys) {
    for (const auto& e : edge_data(Q)) {
        if (e.residue != 0)
            fail(Errc::internal, "transported polygon is not a T-polygon");
        const LatticePoint w = rot90(e.normal);
        const LatticePoint c = dual_partner(w);
        for (i64 j = 1; j <= e.height; ++j) {
            std::vector<Row> rows;
            LatticePoint base;
            if (!slice_rows(g, e.normal, -j, c, w, rows, base)) continue;
            AffinePoly discard;
            discard.width = g.width;
            divide_rows(std::move(rows), base, w, binomial_vector(e.t_count * j), sys, discard);
        }
    }
}

// Applies the algebraic mutation (v, w, k) to the affine form, emitting the
// divisibility equations its negative-height slices must satisfy.
AffinePoly transport(const AffinePoly& g, const MutationData& m, LinearSystem& sys) {
    const LatticePoint c = dual_partner(m.w);
    std::set<i64> heights;
    for (const auto& [e, row] : g.terms) heights.insert(dot(e, m.v));
    i64 max_abs = 0;
    for (i64 h : heights) max_abs = std::max(max_abs, h < 0 ? -h : h);

    // Powers of (1+s)^k as dense vectors.
    std::vector<std::vector<Rat>> fpow{{Rat(1)}};
    for (i64 i = 1; i <= max_abs; ++i)
        fpow.push_back(binomial_vector(m.k * i));

    AffinePoly out;
    out.width = g.width;
    for (i64 h : heights) {
        std::vector<Row> rows;
        LatticePoint base;
        if (!slice_rows(g, m.v, h, c, m.w, rows, base)) continue;
        if (h >= 0) {
            const std::vector<Rat>& f = fpow[static_cast<std::size_t>(h)];
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (row_zero(rows[i])) continue;
                for (std::size_t j = 0; j < f.size(); ++j) {
                    Row scaled = rows[i];
                    for (Rat& x : scaled) x *= f[j];
                    out.add(base + m.w * static_cast<i64>(i + j), scaled);
                }
            }
        } else {
            divide_rows(std::move(rows), base, m.w, fpow[static_cast<std::size_t>(-h)], sys, out);
        }
    }
    return out;
}

FanoPolygon mirror_polygon(const FanoPolygon& p) {
    std::vector<LatticePoint> pts;
    for (const auto& q : p.vertices) pts.push_back({q.x, -q.y});
    return validate_fano(std::move(pts));
}

AffinePoly map_poly(const AffinePoly& g, const LatticePoint& cx, const LatticePoint& u) {
    AffinePoly out;
    out.width = g.width;
    for (const auto& [e, row] : g.terms)
        out.terms.emplace(LatticePoint{dot(cx, e), dot(u, e)}, row);
    return out;
}

AffinePoly mirror_affine(const AffinePoly& g) {
    AffinePoly out;
    out.width = g.width;
    for (const auto& [e, row] : g.terms) out.terms.emplace(LatticePoint{e.x, -e.y}, row);
    return out;
}

std::string state_string(const FanoPolygon& Q, const AffinePoly& g) {
    std::ostringstream os;
    for (const auto& v : Q.vertices) os << v.x << ',' << v.y << ';';
    os << '|';
    for (const auto& [e, row] : g.terms) {
        os << e.x << ',' << e.y << ':';
        for (const auto& r : row) os << r << ',';
        os << ';';
    }
    return os.str();
}

// GL2-canonical key of the joint state (polygon, transported form): minimum
// serialization over the same anchored transform family the normal form uses,
// applied to polygon and form together.
std::string state_key(const FanoPolygon& Q, const AffinePoly& g) {
    std::string best;
    const FanoPolygon qm = mirror_polygon(Q);
    const AffinePoly gm = mirror_affine(g);
    for (int side = 0; side < 2; ++side) {
        const FanoPolygon& P = side ? qm : Q;
        const AffinePoly& f = side ? gm : g;
        const auto edges = edge_data(P);
        for (std::size_t i = 0; i < P.vertices.size(); ++i) {
            const LatticePoint u = edges[i].normal;
            const i64 h = edges[i].height;
            i64 s = 0, t = 0;
            ext_gcd(u.y, -u.x, s, t);
            LatticePoint c{s, t};
            const i64 x0 = dot(c, P.vertices[i]);
            i64 shift = x0 / h;
            if (x0 % h < 0) --shift;
            c = c + u * shift;
            std::vector<LatticePoint> img;
            img.reserve(P.vertices.size());
            for (const auto& vtx : P.vertices) img.push_back({dot(c, vtx), dot(u, vtx)});
            const std::string key = state_string(validate_fano(std::move(img)), map_poly(f, c, u));
            if (best.empty() || key < best) best = key;
        }
    }
    return best;
}

} // namespace

MmlpResult mmlp(const FanoPolygon& P, std::size_t depth) {
    if (depth < 1) fail(Errc::invalid_argument, "constraint depth must be at least 1");
    if (!is_t_polygon(P))
        fail(Errc::not_t_polygon, "polygon has residual cones");

    // Fixed boundary: binomial coefficients along each edge.
    std::map<LatticePoint, Rat> boundary;
    const auto edges = edge_data(P);
    const auto& V = P.vertices;
    for (std::size_t i = 0; i < V.size(); ++i) {
        const EdgeData& e = edges[i];
        const LatticePoint step = primitive(V[(i + 1) % V.size()] - V[i]);
        for (i64 t = 0; t <= e.length; ++t)
            boundary[V[i] + step * t] = Rat(binomial(e.length, t));
    }

    // Unknowns: strict interior points other than the origin (fixed to 0).
    std::vector<LatticePoint> unknowns;
    for (const auto& q : interior_lattice_points(P))
        if (!(q == LatticePoint{0, 0})) unknowns.push_back(q);
    const std::size_t n = unknowns.size();

    AffinePoly f0;
    f0.width = 1 + n;
    for (const auto& [e, coeff] : boundary) {
        Row row(1 + n, Rat(0));
        row[0] = coeff;
        f0.add(e, row);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Row row(1 + n, Rat(0));
        row[1 + i] = 1;
        f0.add(unknowns[i], row);
    }

    LinearSystem sys(n);

    struct State {
        FanoPolygon polygon;
        AffinePoly form;
        std::size_t depth;
    };
    std::deque<State> queue;
    std::set<std::string> seen;
    queue.push_back({P, f0, 0});
    seen.insert(state_key(P, f0));

    bool pinned = false;
    while (!queue.empty() && !pinned) {
        State st = std::move(queue.front());
        queue.pop_front();
        edge_constraints(st.polygon, st.form, sys);
        if (sys.consistent() && sys.solution_dim() == 0) { pinned = true; break; }
        if (st.depth == depth) continue;
        for (const auto& m : admissible_mutations(st.polygon)) {
            const FanoPolygon child = mutate_polygon(st.polygon, m);
            AffinePoly moved = transport(st.form, m, sys);
            if (sys.consistent() && sys.solution_dim() == 0) { pinned = true; break; }
            const std::string key = state_key(child, moved);
            if (!seen.insert(key).second) continue;
            queue.push_back({child, std::move(moved), st.depth + 1});
        }
    }

    if (!sys.consistent())
        fail(Errc::inconsistent_constraints,
             "maximal-mutability constraints have no solution");
    if (sys.solution_dim() != 0)
        fail(Errc::non_unique_solution,
             "interior coefficients are not pinned at this depth",
             static_cast<long long>(sys.solution_dim()));

    const std::vector<Rat> values = sys.solve_unique();
    MmlpResult res;
    res.solution_dim = 0;
    for (const auto& [e, coeff] : boundary) res.poly.set_term(e, coeff);
    for (std::size_t i = 0; i < n; ++i) res.poly.set_term(unknowns[i], values[i]);
    return res;
}

} // namespace tpoly
