#include "doctest.h"

#include "mfb/errors.hpp"
#include "mfb/resolution.hpp"

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

}

TEST_CASE("strict transform multiplicities") {
    CHECK(strict_transform_multiplicity(6, DivisorMult{4, 3}) == 9);
    CHECK(strict_transform_multiplicity(2, DivisorMult{3, 1}) == 2);
    CHECK(strict_transform_multiplicity(4, DivisorMult{6, 1}) == 2);
    CHECK(strict_transform_multiplicity(1, DivisorMult{5, 2}) == 2);
    // arrowheads always come out with multiplicity 1
    CHECK(strict_transform_multiplicity(arrow("p", 7)) == 1);
}

TEST_CASE("chain of a '+' double point") {
    CurveGraph g;
    g.vertices = {node("u", 4, 6, 1), node("w", 4, 2, 1)};
    g.edges = {edge("e", "u", "w")};
    g.sort_records();
    StringChain sc = edge_string(g, g.edges[0]);
    CHECK(sc.sign == EdgeSign::Plus);
    CHECK(sc.coeffs == std::vector<Int>{2});
    CHECK(sc.mults == std::vector<Int>{2});
    CHECK(sc.mu_v1 == 2);
    CHECK(sc.mu_v2 == 2);
    // ends agree with the strict transforms they attach to
    CHECK(sc.mu_v1 == strict_transform_multiplicity(g.vertex("u")));
    CHECK(sc.mu_v2 == strict_transform_multiplicity(g.vertex("w")));
}

TEST_CASE("chain of a '-' double point") {
    CurveGraph g;
    g.vertices = {node("u", 1, 3, 1), node("w", 1, 3, 1)};
    g.edges = {edge("e", "u", "w", EdgeSign::Minus)};
    g.sort_records();
    StringChain sc = edge_string(g, g.edges[0]);
    CHECK(sc.sign == EdgeSign::Minus);
    CHECK(sc.coeffs == std::vector<Int>{2, 2});
    CHECK(sc.mults == std::vector<Int>{1, 1});
    CHECK(sc.mu_v1 == 1);
    CHECK(sc.mu_v2 == 1);
}

TEST_CASE("'-' double point on a shared divisor with m = 0 is unsupported") {
    CurveGraph g;
    g.vertices = {arrow("p", 2), arrow("q", 2)};
    g.edges = {edge("e", "p", "q", EdgeSign::Minus)};
    g.sort_records();
    CHECK_THROWS_AS(edge_string(g, g.edges[0]), decoration_error);
}

TEST_CASE("string insertion on the two-sheet example") {
    CurveGraph g;
    g.vertices = {node("u", 4, 6, 1), node("w", 4, 2, 1)};
    g.edges = {edge("e", "u", "w")};
    g.sort_records();
    MultGraph mg = insert_strings(build_covering(g));

    REQUIRE(mg.vertices.size() == 6);
    CHECK(mg.vertex("u.0").kind == MultKind::Strict);
    CHECK(mg.vertex("u.0").mult == 2);
    CHECK(mg.vertex("u.0").genus == 0);
    CHECK(mg.vertex("e.0.0.s1").kind == MultKind::Chain);
    CHECK(mg.vertex("e.0.0.s1").mult == 2);
    CHECK(mg.vertex("e.0.1.s1").mult == 2);

    REQUIRE(mg.edges.size() == 4);
    // each covered double point becomes a two-edge path through its chain
    CHECK(mg.edges[0].v1 == "e.0.0.s1");
    CHECK(mg.edges[0].v2 == "u.0");
    CHECK(mg.edges[1].v1 == "e.0.0.s1");
    CHECK(mg.edges[1].v2 == "w.0");
    CHECK(mg.edges[2].v1 == "e.0.1.s1");
    CHECK(mg.edges[2].v2 == "u.1");
    CHECK(mg.edges[3].v1 == "e.0.1.s1");
    CHECK(mg.edges[3].v2 == "w.1");
}

TEST_CASE("trivial chains become direct edges") {
    CurveGraph g;
    g.vertices = {node("c", 2, 3, 1), arrow("p", 2), arrow("q", 2)};
    g.edges = {edge("e1", "c", "p"), edge("e2", "c", "q")};
    g.sort_records();
    MultGraph mg = insert_strings(build_covering(g));
    REQUIRE(mg.vertices.size() == 3);
    CHECK(mg.vertex("c.0").mult == 2);
    CHECK(mg.vertex("p.0").kind == MultKind::Arrow);
    CHECK(mg.vertex("p.0").mult == 1);
    REQUIRE(mg.edges.size() == 2);
    CHECK(mg.edges[0].v1 == "c.0");
    CHECK(mg.edges[0].v2 == "p.0");
}

TEST_CASE("strict transforms carry the covering genus") {
    CurveGraph g;
    g.vertices = {node("v", 4, 6, 1, 1, {2, 4})};
    g.sort_records();
    MultGraph mg = insert_strings(build_covering(g));
    REQUIRE(mg.vertices.size() == 2);
    // each of the two sheets has euler characteristic 0, so genus 1
    CHECK(mg.vertex("v.0").genus == 1);
    CHECK(mg.vertex("v.1").genus == 1);
    CHECK(mg.vertex("v.0").mult == 2);
}

TEST_CASE("'-' chains keep the sign on every inserted edge") {
    CurveGraph g;
    g.vertices = {node("u", 1, 3, 1), node("w", 1, 3, 1)};
    g.edges = {edge("e", "u", "w", EdgeSign::Minus)};
    g.sort_records();
    MultGraph mg = insert_strings(build_covering(g));
    REQUIRE(mg.edges.size() == 3);
    for (const auto& e : mg.edges) CHECK(e.sign == EdgeSign::Minus);
    // path u.0 -- s2 -- s1 -- w.0: mults stay 1 along the chain
    CHECK(mg.vertex("e.0.0.s1").mult == 1);
    CHECK(mg.vertex("e.0.0.s2").mult == 1);
}
