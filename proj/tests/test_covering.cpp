#include "doctest.h"

#include "mfb/covering.hpp"
#include "mfb/errors.hpp"

using namespace mfb;

namespace {

CurveVertex node(const std::string& id, Int mf, Int pm, Int pn, Int genus = 0,
                 std::vector<Int> switches = {}) {
    CurveVertex v;
    v.id = id;
    v.kind = VertexKind::Node;
    v.mf = mf;
    v.pair = {pm, pn};
    v.genus = genus;
    v.switches = std::move(switches);
    return v;
}

CurveVertex arrow(const std::string& id, Int mf) {
    CurveVertex v;
    v.id = id;
    v.kind = VertexKind::Arrowhead;
    v.mf = mf;
    return v;
}

CurveEdge edge(const std::string& id, const std::string& v1, const std::string& v2,
               EdgeSign sign = EdgeSign::Plus) {
    CurveEdge e;
    e.id = id;
    e.v1 = v1;
    e.v2 = v2;
    e.sign = sign;
    return e;
}

// two nodes with a 2-sheeted fiber over everything
CurveGraph two_sheets() {
    CurveGraph g;
    g.name = "c2";
    g.vertices = {node("u", 4, 6, 1), node("w", 4, 2, 1)};
    g.edges = {edge("e", "u", "w")};
    g.sort_records();
    return g;
}

}

TEST_CASE("component counts over a curve") {
    SUBCASE("switches enter the gcd") {
        CurveGraph g;
        g.vertices = {node("v", 4, 6, 1, 1, {2, 4})};
        CHECK(component_count(g, g.vertices[0]) == 2);
        g.vertices = {node("v", 4, 6, 1, 1, {3, 4})};
        CHECK(component_count(g, g.vertices[0]) == 1);
    }
    SUBCASE("incident third divisors enter the gcd") {
        CurveGraph g = two_sheets();
        CHECK(component_count(g, g.vertex("u")) == 2);
        CHECK(component_count(g, g.vertex("w")) == 2);
    }
    SUBCASE("arrowhead pairs drop out") {
        CurveGraph g;
        g.vertices = {node("c", 2, 3, 1), arrow("p", 2)};
        g.edges = {edge("e", "c", "p")};
        g.sort_records();
        // gcd(2, 0, third 3) = 1 at the arrowhead
        CHECK(component_count(g, g.vertex("p")) == 1);
        CHECK(component_count(g, g.vertex("c")) == 1);
    }
}

TEST_CASE("double point counts over a double point") {
    CurveGraph g = two_sheets();
    CHECK(edge_fiber_count(g, g.edges[0]) == 2);

    CurveGraph h;
    h.vertices = {node("u", 1, 3, 1), node("w", 1, 3, 1)};
    h.edges = {edge("e", "u", "w", EdgeSign::Minus)};
    h.sort_records();
    // '-' edge: gcd(pair m, the two F-multiplicities) = gcd(3, 1, 1)
    CHECK(edge_fiber_count(h, h.edges[0]) == 1);
}

TEST_CASE("euler characteristic of covering components") {
    SUBCASE("isolated rational node") {
        CurveGraph g;
        g.vertices = {node("c", 2, 3, 1)};
        CHECK(euler_char(g, g.vertices[0]) == 2);
    }
    SUBCASE("two sheets over a genus-1 curve") {
        CurveGraph g;
        g.vertices = {node("v", 4, 6, 1, 1, {2, 4})};
        CHECK(euler_char(g, g.vertices[0]) == 0);
    }
    SUBCASE("odd characteristic is rejected") {
        CurveGraph g;
        g.vertices = {node("u", 2, 2, 1), node("w", 2, 3, 1)};
        g.edges = {edge("e", "u", "w")};
        g.sort_records();
        CHECK_THROWS_AS(euler_char(g, g.vertex("u")), decoration_error);
        CHECK_THROWS_AS(build_covering(g), decoration_error);
    }
    SUBCASE("characteristic above 2 is rejected") {
        CurveGraph g;
        g.vertices = {node("u", 6, 6, 1), node("w", 6, 2, 1)};
        g.edges = {edge("e", "u", "w")};
        g.sort_records();
        CHECK_THROWS_AS(euler_char(g, g.vertex("u")), decoration_error);
    }
}

TEST_CASE("covering of the two-sheet example") {
    CurveGraph g = two_sheets();
    CoveredGraph cg = build_covering(g);

    REQUIRE(cg.vertices.size() == 4);
    CHECK(cg.vertices[0].id == "u.0");
    CHECK(cg.vertex("u.0").base == "u");
    CHECK(cg.vertex("u.1").index == 1);
    CHECK(*cg.vertex("u.0").euler == 2);
    CHECK(*cg.vertex("w.1").euler == 2);

    REQUIRE(cg.edges.size() == 2);
    CHECK(cg.edges[0].id == "e.0.0");
    CHECK(cg.edges[0].v1 == "u.0");
    CHECK(cg.edges[0].v2 == "w.0");
    CHECK(cg.edges[1].v1 == "u.1");
    CHECK(cg.edges[1].v2 == "w.1");
}

TEST_CASE("attach offsets shift the fiber matching") {
    CurveGraph g = two_sheets();
    g.edges[0].attach2 = 1;
    CoveredGraph cg = build_covering(g);
    REQUIRE(cg.edges.size() == 2);
    CHECK(cg.edges[0].v1 == "u.0");
    CHECK(cg.edges[0].v2 == "w.1");
    CHECK(cg.edges[1].v1 == "u.1");
    CHECK(cg.edges[1].v2 == "w.0");
}

TEST_CASE("parallel double points lift copy by copy") {
    CurveGraph g = two_sheets();
    g.edges[0].count = 2;
    CoveredGraph cg = build_covering(g);
    REQUIRE(cg.edges.size() == 4);
    CHECK(cg.edges[0].id == "e.0.0");
    CHECK(cg.edges[1].id == "e.0.1");
    CHECK(cg.edges[2].id == "e.1.0");
    CHECK(cg.edges[3].id == "e.1.1");
    CHECK(cg.edges[2].copy == 1);
    CHECK(cg.edges[2].index == 0);
    CHECK(cg.edges[2].v1 == "u.0");
}

TEST_CASE("arrowheads lift without an euler characteristic") {
    CurveGraph g;
    g.vertices = {node("c", 2, 3, 1), arrow("p", 2), arrow("q", 2)};
    g.edges = {edge("e1", "c", "p"), edge("e2", "c", "q")};
    g.sort_records();
    CoveredGraph cg = build_covering(g);
    REQUIRE(cg.vertices.size() == 3);
    CHECK(cg.vertex("c.0").euler.has_value());
    CHECK(!cg.vertex("p.0").euler.has_value());
    CHECK(cg.vertex("p.0").kind == VertexKind::Arrowhead);
    CHECK(cg.edges.size() == 2);
}
