#include "doctest.h"

#include <algorithm>
#include <set>

#include "support.hpp"
#include "tpoly/errors.hpp"
#include "tpoly/polygon.hpp"

using namespace tpoly;
using namespace testsupport;

namespace {

// The quadrilateral with eight smoothable cones and one residual cone, and
// the result of mutating it along v=(0,-1) with a width-1 factor.
const std::vector<LatticePoint> kResidualQuad = {
    {-2, -1}, {1, -1}, {2, 1}, {-2, 1}};
const std::vector<LatticePoint> kResidualQuadMutated = {
    {-2, -1}, {2, -1}, {1, 1}, {-2, 1}};

FanoPolygon square() {
    return validate_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
}

} // namespace

TEST_CASE("hull validation orders vertices ccw from the lex-smallest") {
    FanoPolygon P = square();
    std::vector<LatticePoint> want = {{-1, 0}, {0, -1}, {1, 0}, {0, 1}};
    CHECK(P.vertices == want);
    // Input order and duplicated/interior points are irrelevant.
    FanoPolygon Q = validate_fano(
        {{0, 1}, {1, 0}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}});
    CHECK(Q == P);
}

TEST_CASE("hull validation rejects degenerate and off-center input") {
    CHECK_THROWS_AS_MESSAGE(validate_fano({{0, 1}, {0, -1}, {0, 2}}), Error,
                            doctest::Contains("NotConvex"));
    // Origin on the boundary.
    CHECK_THROWS_AS(validate_fano({{0, 1}, {-1, -1}, {0, -1}}), Error);
    // Origin outside.
    CHECK_THROWS_AS(validate_fano({{1, 1}, {3, 1}, {1, 3}}), Error);
    // Non-primitive vertex.
    CHECK_THROWS_AS(validate_fano({{2, 0}, {0, 1}, {-1, -1}}), Error);
    try {
        validate_fano({{2, 0}, {0, 1}, {-1, -1}});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_primitive_vertex);
    }
}

TEST_CASE("edge data of the residual-cone quadrilateral") {
    FanoPolygon P = validate_fano(kResidualQuad);
    std::vector<EdgeData> edges = edge_data(P);
    REQUIRE(edges.size() == 4);
    // One edge has height 3 and lattice length 1: a pure residual cone.
    bool found_residual = false;
    i64 t_total = 0;
    for (const EdgeData& e : edges) {
        CHECK(e.length == e.t_count * e.height + e.residue);
        CHECK(e.residue < e.height);
        CHECK(e.residue >= 0);
        t_total += e.t_count;
        if (e.normal == LatticePoint{-2, 1}) {
            CHECK(e.height == 3);
            CHECK(e.length == 1);
            CHECK(e.t_count == 0);
            CHECK(e.residue == 1);
            found_residual = true;
        }
    }
    CHECK(found_residual);
    CHECK(t_total == 8);
}

TEST_CASE("singularity content of the residual-cone quadrilateral") {
    SingularityContent c = singularity_content(validate_fano(kResidualQuad));
    CHECK(c.t_cones == 8);
    REQUIRE(c.basket.size() == 1);
    CHECK(c.basket[0] == RCone{1, 3});
    CHECK_FALSE(is_t_polygon(validate_fano(kResidualQuad)));
}

TEST_CASE("content of the axis square and the standard triangle") {
    SingularityContent cs = singularity_content(square());
    CHECK(cs.t_cones == 4);
    CHECK(cs.basket.empty());
    CHECK(is_t_polygon(square()));

    FanoPolygon T = validate_fano({{1, 0}, {0, 1}, {-1, -1}});
    SingularityContent ct = singularity_content(T);
    CHECK(ct.t_cones == 3);
    CHECK(ct.basket.empty());
}

TEST_CASE("normal vector index separates the square from the triangles") {
    CHECK(normal_vector_index(square()) == 2);
    CHECK(normal_vector_index(validate_fano({{1, 0}, {0, 1}, {-1, -1}})) == 3);
    CHECK(normal_vector_index(
              validate_fano({{1, 0}, {0, 1}, {-1, -1}, {0, -1}})) == 1);
}

TEST_CASE("boundary count, interior count and double area satisfy Pick") {
    FanoPolygon P = validate_fano({{-1, -2}, {5, -2}, {-1, 4}});
    CHECK(boundary_lattice_count(P) == 18);
    Rng rng(test_seed());
    for (int i = 0; i < 50; ++i) {
        FanoPolygon Q = random_fano(rng);
        i64 b = boundary_lattice_count(Q);
        i64 in = static_cast<i64>(interior_lattice_points(Q).size());
        CHECK(double_area(Q) == 2 * in + b - 2);
        CHECK(static_cast<i64>(lattice_points(Q).size()) == in + b);
    }
}

TEST_CASE("the known width-1 mutation of the residual quadrilateral") {
    FanoPolygon P = validate_fano(kResidualQuad);
    FanoPolygon Q = mutate_polygon(P, {{0, -1}, {1, 0}, 1});
    CHECK(Q == validate_fano(kResidualQuadMutated));
    CHECK(same_content_multiset(singularity_content(P),
                                singularity_content(Q)));
}

TEST_CASE("non-admissible mutation reports the failing height") {
    try {
        mutate_polygon(square(), {{1, 0}, {0, 1}, 1});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::not_mutable);
        CHECK(e.detail() == -1);
    }
}

TEST_CASE("admissible mutations match the slice test") {
    FanoPolygon P = square();
    std::vector<MutationData> ms = admissible_mutations(P);
    CHECK(!ms.empty());
    for (const MutationData& m : ms) {
        // Each admissible mutation must actually apply.
        FanoPolygon Q = mutate_polygon(P, m);
        CHECK(Q.vertices.size() >= 3);
    }
}

TEST_CASE("normal form is idempotent and unimodular-invariant") {
    Rng rng(test_seed() + 1);
    for (int i = 0; i < 50; ++i) {
        FanoPolygon P = random_fano(rng);
        FanoPolygon N = normal_form(P);
        CHECK(normal_form(N) == N);
        // Shear: (x, y) -> (x + y, y) is unimodular.
        std::vector<LatticePoint> sheared;
        for (const LatticePoint& v : P.vertices)
            sheared.push_back({v.x + v.y, v.y});
        CHECK(normal_form(validate_fano(sheared)) == N);
        // Mirror: (x, y) -> (y, x).
        std::vector<LatticePoint> mirrored;
        for (const LatticePoint& v : P.vertices)
            mirrored.push_back({v.y, v.x});
        CHECK(normal_form(validate_fano(mirrored)) == N);
    }
}

TEST_CASE("mutation graph honours its bounds and is deterministic") {
    FanoPolygon T = validate_fano({{1, 0}, {0, 1}, {-1, -1}});
    MutationGraph g0 = mutation_graph(T, 100, 0);
    CHECK(g0.nodes.size() == 1);
    CHECK(g0.edges.empty());
    CHECK(g0.depth == std::vector<std::size_t>{0});

    MutationGraph g2 = mutation_graph(T, 100, 2);
    CHECK(g2.nodes.size() >= 2);
    for (const MutationEdge& e : g2.edges) {
        CHECK(e.from < g2.nodes.size());
        CHECK(e.to < g2.nodes.size());
    }
    // Node 0 is the normal form of the start.
    CHECK(g2.nodes[0] == normal_form(T));
    // Every node is reachable: depths are consistent with some edge.
    for (std::size_t i = 1; i < g2.nodes.size(); ++i)
        CHECK(g2.depth[i] >= 1);

    CHECK(graph_to_dot(g2) == graph_to_dot(mutation_graph(T, 100, 2)));
    CHECK(graph_to_dot(g2).find("digraph") == 0);
}

TEST_CASE("depth-1 graph of the residual quadrilateral finds its mutation") {
    FanoPolygon P = validate_fano(kResidualQuad);
    MutationGraph g = mutation_graph(P, 100, 1);
    FanoPolygon want = normal_form(validate_fano(kResidualQuadMutated));
    CHECK(std::find(g.nodes.begin(), g.nodes.end(), want) != g.nodes.end());
}

TEST_CASE("node bound truncates the search") {
    FanoPolygon T = validate_fano({{1, 0}, {0, 1}, {-1, -1}});
    MutationGraph g = mutation_graph(T, 2, 10);
    CHECK(g.nodes.size() <= 2);
    CHECK(g.truncated);
}

TEST_CASE("mutation chains: trivial, one-step, and replayable") {
    FanoPolygon S = square();
    auto trivial = find_mutation_chain(S, S, 100, 3);
    REQUIRE(trivial.has_value());
    CHECK(trivial->empty());

    Rng rng(test_seed() + 2);
    for (int i = 0; i < 20; ++i) {
        FanoPolygon P = random_t_walk(rng, 1);
        auto m = random_mutation_of(rng, P);
        if (!m) continue;
        FanoPolygon Q = mutate_polygon(P, *m);
        auto chain = find_mutation_chain(P, Q, 2000, 2);
        REQUIRE(chain.has_value());
        CHECK(chain->size() <= 1);
        // Replaying the chain from P must land on Q's normal form.
        FanoPolygon R = P;
        for (const MutationData& step : *chain) R = mutate_polygon(R, step);
        CHECK(normal_form(R) == normal_form(Q));
    }

    // Unreachable target: distinct classes never connect.
    FanoPolygon T10 = validate_fano({{1, 0}, {0, 1}, {-1, -1}});
    CHECK_FALSE(find_mutation_chain(S, T10, 500, 4).has_value());
}

TEST_CASE("convex hull drops collinear boundary points") {
    std::vector<LatticePoint> hull =
        convex_hull_vertices({{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}});
    CHECK(hull == std::vector<LatticePoint>{{0, 0}, {2, 0}, {2, 2}, {0, 2}});
}
