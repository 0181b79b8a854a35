#pragma once

#include <optional>
#include <vector>

#include "tpoly/core.hpp"

namespace tpoly {

// A Fano polygon: a strictly convex lattice polygon with primitive vertices
// and the origin in its strict interior.  Vertices are stored in
// counterclockwise order starting from the lexicographically smallest vertex;
// construction goes through validate_fano so every instance is canonical.
struct FanoPolygon {
    std::vector<LatticePoint> vertices;

    friend bool operator==(const FanoPolygon&, const FanoPolygon&) = default;
    friend auto operator<=>(const FanoPolygon& a, const FanoPolygon& b) {
        return a.vertices <=> b.vertices;
    }
};

// Per-edge combinatorial data.  The edge from vertices[i] to vertices[i+1]
// has primitive inward normal `normal` with <normal, p> = -height for every
// lattice point p on the edge; `length` is the lattice length, and
// length = t_count * height + residue with 0 <= residue < height.
struct EdgeData {
    LatticePoint normal;
    i64 height = 0;
    i64 length = 0;
    i64 t_count = 0;  // number of T-cones supported on this edge
    i64 residue = 0;  // leftover width of the residual cone (0 for none)
};

// One residual (non-smoothable) cone: width `residue` at height `height`.
struct RCone {
    i64 residue = 0;
    i64 height = 0;
    friend bool operator==(const RCone&, const RCone&) = default;
    friend auto operator<=>(const RCone&, const RCone&) = default;
};

// Mutation-invariant decomposition of the boundary singularity data:
// total number of T-cones plus the cyclically ordered basket of R-cones.
// The basket is stored rotated to its lexicographically minimal rotation so
// equality of values is equality of cyclic orders.
struct SingularityContent {
    i64 t_cones = 0;
    std::vector<RCone> basket;
    friend bool operator==(const SingularityContent&, const SingularityContent&) = default;
};

// One mutation: primitive direction v, primitive w spanning v's annihilator
// (<w, v> = 0), and width k >= 1.  The factor is the segment from 0 to k*w.
struct MutationData {
    LatticePoint v;
    LatticePoint w;
    i64 k = 1;
    friend bool operator==(const MutationData&, const MutationData&) = default;
};

// Strict convex hull (collinear boundary points dropped), ccw starting from
// the lexicographically smallest point.  Degenerate inputs (fewer than three
// non-collinear points) come back with fewer than three points.
std::vector<LatticePoint> convex_hull_vertices(std::vector<LatticePoint> points);

// Hull + validation.  Drops input points that are not vertices of the hull,
// orders the rest counterclockwise from the lexicographically smallest
// vertex.  Errors: not_convex (hull degenerate), origin_not_interior,
// non_primitive_vertex.
FanoPolygon validate_fano(std::vector<LatticePoint> points);

// Edges in ccw order; edge i runs from vertices[i] to vertices[i+1 mod n].
std::vector<EdgeData> edge_data(const FanoPolygon& p);

SingularityContent singularity_content(const FanoPolygon& p);

// True when every edge has residue 0, i.e. all boundary cones are T-cones.
bool is_t_polygon(const FanoPolygon& p);

// Index in Z^2 of the sublattice spanned by the primitive inward edge
// normals.
i64 normal_vector_index(const FanoPolygon& p);

// Canonical representative of the GL2(Z)-orbit of p: the minimum, over a
// complete family of edge-anchored Hermite-reduced unimodular images of p and
// of its mirror, of the canonical vertex sequence.  Idempotent; two polygons
// have equal normal forms iff they are unimodularly equivalent.
FanoPolygon normal_form(const FanoPolygon& p);

// Applies the mutation m to p.  Exact rational slice intervals; errors with
// not_mutable (detail = the failing height) when some negative-height slice
// is too short to split off (-h)*k copies of w.
FanoPolygon mutate_polygon(const FanoPolygon& p, const MutationData& m);

// All admissible mutations of p: v ranges over the primitive inward edge
// normals and their negatives, w over both primitive generators of v's
// annihilator, and 1 <= k <= t_count of the edge attaining the minimal
// height for v; candidates failing the slice decomposition test are dropped.
std::vector<MutationData> admissible_mutations(const FanoPolygon& p);

// Boundary helpers -----------------------------------------------------------

// All lattice points of p (boundary and interior), sorted lexicographically.
std::vector<LatticePoint> lattice_points(const FanoPolygon& p);
// Strict interior lattice points of p, sorted lexicographically.
std::vector<LatticePoint> interior_lattice_points(const FanoPolygon& p);
// Number of lattice points on the boundary.
i64 boundary_lattice_count(const FanoPolygon& p);
// Twice the (positive) area.
i64 double_area(const FanoPolygon& p);

// Mutation graph --------------------------------------------------------------

struct MutationEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    MutationData mutation;
};

// Nodes are normal forms, in BFS discovery order (node 0 is the normal form
// of the start polygon).  `truncated` is set when either bound stopped the
// search before it closed.
struct MutationGraph {
    std::vector<FanoPolygon> nodes;
    std::vector<MutationEdge> edges;
    std::vector<std::size_t> depth;  // BFS depth per node
    bool truncated = false;
};

MutationGraph mutation_graph(const FanoPolygon& start, std::size_t max_nodes,
                             std::size_t max_depth);

// Deterministic DOT rendering of a mutation graph: nodes labelled with vertex
// lists, edges labelled "v=(a,b) w=(c,d) k=n", both in discovery order.
std::string graph_to_dot(const MutationGraph& g);

// BFS witness search: a chain of mutations carrying `start` to a polygon
// whose normal form equals normal_form(target), within the given bounds.
// Returns std::nullopt when the bounded search exhausts without a witness.
std::optional<std::vector<MutationData>> find_mutation_chain(
    const FanoPolygon& start, const FanoPolygon& target, std::size_t max_nodes,
    std::size_t max_depth);

} // namespace tpoly
