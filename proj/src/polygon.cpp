#include "tpoly/polygon.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

#include "tpoly/errors.hpp"

namespace tpoly {

// Monotone-chain convex hull of distinct sorted points; strictly convex
// (collinear boundary points are dropped).  Result is ccw starting from the
// lexicographically smallest point.
std::vector<LatticePoint> convex_hull_vertices(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) { // upper chain
        while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first
    return hull;
}

namespace {

FanoPolygon mirror(const FanoPolygon& p) {
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertices.size());
    for (const auto& q : p.vertices) pts.push_back({q.x, -q.y});
    return validate_fano(std::move(pts));
}

// Exact slice interval table: for each integer height h = <p, v> in
// [h_min, h_max], the interval [lo, hi] of tau = <p, c> over the slice,
// where c is a fixed dual partner of w (so tau steps by 1 along w).
struct SliceTable {
    i64 h_min = 0, h_max = 0;
    std::vector<Rat> lo, hi;

    const Rat& lo_at(i64 h) const { return lo[static_cast<std::size_t>(h - h_min)]; }
    const Rat& hi_at(i64 h) const { return hi[static_cast<std::size_t>(h - h_min)]; }
};

SliceTable slice_table(const FanoPolygon& p, const LatticePoint& v, const LatticePoint& c) {
    const auto& V = p.vertices;
    const std::size_t n = V.size();
    SliceTable t;
    t.h_min = t.h_max = dot(V[0], v);
    for (const auto& q : V) {
        t.h_min = std::min(t.h_min, dot(q, v));
        t.h_max = std::max(t.h_max, dot(q, v));
    }
    const std::size_t width = static_cast<std::size_t>(t.h_max - t.h_min + 1);
    t.lo.assign(width, Rat());
    t.hi.assign(width, Rat());
    std::vector<bool> seen(width, false);
    auto record = [&](i64 h, const Rat& tau) {
        const std::size_t i = static_cast<std::size_t>(h - t.h_min);
        if (!seen[i]) {
            seen[i] = true;
            t.lo[i] = t.hi[i] = tau;
        } else {
            if (tau < t.lo[i]) t.lo[i] = tau;
            if (tau > t.hi[i]) t.hi[i] = tau;
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = V[i], b = V[(i + 1) % n];
        const i64 ha = dot(a, v), hb = dot(b, v);
        const i64 ta = dot(a, c), tb = dot(b, c);
        if (ha == hb) {
            record(ha, Rat(ta));
            record(ha, Rat(tb));
            continue;
        }
        const i64 lo_h = std::min(ha, hb), hi_h = std::max(ha, hb);
        for (i64 h = lo_h; h <= hi_h; ++h) {
            // tau at the point of the edge with height h.  The fraction must
            // be canonicalized before use: gmp assumes canonical operands.
            Rat frac(h - ha, hb - ha);
            frac.canonicalize();
            record(h, Rat(ta) + frac * Rat(tb - ta));
        }
    }
    for (std::size_t i = 0; i < width; ++i)
        if (!seen[i]) fail(Errc::internal, "slice table has a hole");
    return t;
}

std::vector<RCone> min_rotation(std::vector<RCone> basket) {
    if (basket.size() < 2) return basket;
    std::vector<RCone> best = basket;
    for (std::size_t r = 1; r < basket.size(); ++r) {
        std::rotate(basket.begin(), basket.begin() + 1, basket.end());
        if (basket < best) best = basket;
    }
    return best;
}

} // namespace

FanoPolygon validate_fano(std::vector<LatticePoint> points) {
    std::vector<LatticePoint> hull = convex_hull_vertices(std::move(points));
    if (hull.size() < 3)
        fail(Errc::not_convex, "needs at least three non-collinear points");
    const std::size_t n = hull.size();
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = hull[i], b = hull[(i + 1) % n];
        if (cross(b - a, LatticePoint{0, 0} - a) <= 0)
            fail(Errc::origin_not_interior,
                 "origin is not strictly inside (edge " + to_string(a) + " -> " +
                     to_string(b) + ")");
    }
    for (const auto& q : hull)
        if (!is_primitive(q))
            fail(Errc::non_primitive_vertex, to_string(q) + " is not primitive");
    return FanoPolygon{std::move(hull)};
}

std::vector<EdgeData> edge_data(const FanoPolygon& p) {
    const auto& V = p.vertices;
    const std::size_t n = V.size();
    std::vector<EdgeData> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const LatticePoint a = V[i], b = V[(i + 1) % n];
        const LatticePoint d = b - a;
        EdgeData e;
        e.length = gcd_ll(d.x, d.y);
        e.normal = rot90(primitive(d)); // interior lies left of ccw edges
        e.height = -dot(e.normal, a);
        if (e.height < 1) fail(Errc::internal, "edge height must be positive");
        e.t_count = e.length / e.height;
        e.residue = e.length % e.height;
        out.push_back(e);
    }
    return out;
}

SingularityContent singularity_content(const FanoPolygon& p) {
    SingularityContent sc;
    std::vector<RCone> basket;
    for (const auto& e : edge_data(p)) {
        sc.t_cones += e.t_count;
        if (e.residue > 0) basket.push_back(RCone{e.residue, e.height});
    }
    sc.basket = min_rotation(std::move(basket));
    return sc;
}

bool is_t_polygon(const FanoPolygon& p) {
    for (const auto& e : edge_data(p))
        if (e.residue != 0) return false;
    return true;
}

i64 normal_vector_index(const FanoPolygon& p) {
    std::vector<std::vector<Int>> rows;
    for (const auto& e : edge_data(p))
        rows.push_back({Int(e.normal.x), Int(e.normal.y)});
    const std::vector<Int> d = smith_divisors(rows);
    if (d.size() != 2) fail(Errc::internal, "edge normals do not span the plane");
    const Int idx = d[0] * d[1];
    return static_cast<i64>(idx.get_si());
}

FanoPolygon normal_form(const FanoPolygon& p) {
    std::optional<std::vector<LatticePoint>> best;
    const FanoPolygon m = mirror(p);
    for (const FanoPolygon* q : {&p, &m}) {
        const auto& V = q->vertices;
        const auto edges = edge_data(*q);
        for (std::size_t i = 0; i < V.size(); ++i) {
            const LatticePoint u = edges[i].normal;
            const i64 h = edges[i].height;
            // First transform row c: cross(c, u) = 1, pinned so the anchor
            // vertex's first coordinate lies in [0, h).
            i64 s = 0, t = 0;
            ext_gcd(u.y, -u.x, s, t);
            LatticePoint c{s, t};
            const i64 x0 = dot(c, V[i]);
            // X(anchor) = x0 - shift*h; Euclidean division puts it in [0, h).
            i64 shift = x0 / h;
            if (x0 % h < 0) --shift;
            c = c + u * shift;
            std::vector<LatticePoint> img;
            img.reserve(V.size());
            for (const auto& vtx : V) img.push_back({dot(c, vtx), dot(u, vtx)});
            FanoPolygon cand = validate_fano(std::move(img));
            if (!best || cand.vertices < *best) best = std::move(cand.vertices);
        }
    }
    return FanoPolygon{*best};
}

FanoPolygon mutate_polygon(const FanoPolygon& p, const MutationData& m) {
    if (m.k < 1) fail(Errc::invalid_argument, "mutation width must be at least 1");
    if (!is_primitive(m.v)) fail(Errc::invalid_argument, "mutation direction must be primitive");
    if (!is_primitive(m.w)) fail(Errc::invalid_argument, "mutation factor direction must be primitive");
    if (dot(m.v, m.w) != 0)
        fail(Errc::invalid_argument, "factor direction must annihilate the height direction");

    const LatticePoint c = dual_partner(m.w);
    const SliceTable t = slice_table(p, m.v, c);
    for (i64 h = t.h_min; h < 0; ++h) {
        const Rat need(-h * m.k);
        if (t.hi_at(h) - t.lo_at(h) < need)
            fail(Errc::not_mutable,
                 "slice at height " + std::to_string(h) + " is too short to factor",
                 h);
    }

    std::vector<LatticePoint> pts;
    for (const auto& q : p.vertices) {
        const i64 h = dot(q, m.v);
        const Rat tau(dot(q, c));
        if (tau == t.lo_at(h)) pts.push_back(q);
        if (tau == t.hi_at(h)) pts.push_back(q + m.w * (h * m.k));
    }
    return validate_fano(std::move(pts));
}

std::vector<MutationData> admissible_mutations(const FanoPolygon& p) {
    std::vector<MutationData> out;
    for (const auto& e : edge_data(p)) {
        const LatticePoint v = e.normal;
        const LatticePoint w0 = rot90(v);
        for (const LatticePoint& w : {w0, -w0}) {
            for (i64 k = 1; k <= e.t_count; ++k) {
                MutationData m{v, w, k};
                try {
                    mutate_polygon(p, m);
                } catch (const Error& err) {
                    if (err.code() == Errc::not_mutable) continue;
                    throw;
                }
                out.push_back(m);
            }
        }
    }
    return out;
}

std::vector<LatticePoint> lattice_points(const FanoPolygon& p) {
    const auto edges = edge_data(p);
    i64 xlo = p.vertices[0].x, xhi = xlo, ylo = p.vertices[0].y, yhi = ylo;
    for (const auto& q : p.vertices) {
        xlo = std::min(xlo, q.x); xhi = std::max(xhi, q.x);
        ylo = std::min(ylo, q.y); yhi = std::max(yhi, q.y);
    }
    std::vector<LatticePoint> out;
    for (i64 x = xlo; x <= xhi; ++x)
        for (i64 y = ylo; y <= yhi; ++y) {
            const LatticePoint q{x, y};
            bool inside = true;
            for (const auto& e : edges)
                if (dot(e.normal, q) < -e.height) { inside = false; break; }
            if (inside) out.push_back(q);
        }
    return out;
}

std::vector<LatticePoint> interior_lattice_points(const FanoPolygon& p) {
    const auto edges = edge_data(p);
    std::vector<LatticePoint> out;
    for (const auto& q : lattice_points(p)) {
        bool strict = true;
        for (const auto& e : edges)
            if (dot(e.normal, q) == -e.height) { strict = false; break; }
        if (strict) out.push_back(q);
    }
    return out;
}

i64 boundary_lattice_count(const FanoPolygon& p) {
    i64 n = 0;
    for (const auto& e : edge_data(p)) n += e.length;
    return n;
}

i64 double_area(const FanoPolygon& p) {
    const auto& V = p.vertices;
    i64 a = 0;
    for (std::size_t i = 0; i < V.size(); ++i)
        a += cross(V[i], V[(i + 1) % V.size()]);
    return a; // positive: vertices are ccw
}

MutationGraph mutation_graph(const FanoPolygon& start, std::size_t max_nodes,
                             std::size_t max_depth) {
    MutationGraph g;
    std::map<std::vector<LatticePoint>, std::size_t> index;
    g.nodes.push_back(normal_form(start));
    g.depth.push_back(0);
    index[g.nodes[0].vertices] = 0;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        for (const auto& m : admissible_mutations(g.nodes[i])) {
            const FanoPolygon child = normal_form(mutate_polygon(g.nodes[i], m));
            auto it = index.find(child.vertices);
            if (it != index.end()) {
                g.edges.push_back({i, it->second, m});
                continue;
            }
            if (g.depth[i] >= max_depth || g.nodes.size() >= max_nodes) {
                g.truncated = true;
                continue;
            }
            const std::size_t j = g.nodes.size();
            index[child.vertices] = j;
            g.nodes.push_back(child);
            g.depth.push_back(g.depth[i] + 1);
            g.edges.push_back({i, j, m});
            queue.push_back(j);
        }
    }
    return g;
}

std::string graph_to_dot(const MutationGraph& g) {
    std::ostringstream os;
    os << "digraph mutations {\n";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"";
        const auto& V = g.nodes[i].vertices;
        for (std::size_t j = 0; j < V.size(); ++j) {
            if (j) os << ' ';
            os << to_string(V[j]);
        }
        os << "\"];\n";
    }
    for (const auto& e : g.edges)
        os << "  n" << e.from << " -> n" << e.to << " [label=\"v=" << to_string(e.mutation.v)
           << " w=" << to_string(e.mutation.w) << " k=" << e.mutation.k << "\"];\n";
    os << "}\n";
    return os.str();
}

std::optional<std::vector<MutationData>> find_mutation_chain(
    const FanoPolygon& start, const FanoPolygon& target, std::size_t max_nodes,
    std::size_t max_depth) {
    const FanoPolygon goal = normal_form(target);
    // Nodes hold the polygons actually reached from `start`, so the returned
    // steps replay literally; deduplication still happens per normal form.
    std::map<std::vector<LatticePoint>, std::size_t> seen;
    std::vector<FanoPolygon> nodes{start};
    std::vector<std::size_t> depth{0};
    std::vector<std::size_t> parent{SIZE_MAX};
    std::vector<MutationData> via{MutationData{}};
    seen[normal_form(start).vertices] = 0;
    auto chain_to = [&](std::size_t i) {
        std::vector<MutationData> chain;
        for (; parent[i] != SIZE_MAX; i = parent[i]) chain.push_back(via[i]);
        std::reverse(chain.begin(), chain.end());
        return chain;
    };
    if (normal_form(start) == goal) return chain_to(0);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t i = queue.front();
        queue.pop_front();
        if (depth[i] >= max_depth) continue;
        for (const auto& m : admissible_mutations(nodes[i])) {
            FanoPolygon child = mutate_polygon(nodes[i], m);
            FanoPolygon key = normal_form(child);
            if (seen.count(key.vertices)) continue;
            if (nodes.size() >= max_nodes) return std::nullopt;
            const std::size_t j = nodes.size();
            seen[key.vertices] = j;
            nodes.push_back(std::move(child));
            depth.push_back(depth[i] + 1);
            parent.push_back(i);
            via.push_back(m);
            if (key == goal) return chain_to(j);
            queue.push_back(j);
        }
    }
    return std::nullopt;
}

} // namespace tpoly
