#include "doctest.h"

#include <fstream>
#include <sstream>

#include "mfb/errors.hpp"
#include "mfb/io.hpp"

using namespace mfb;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

std::string fixture(const std::string& name) {
    return read_file(std::string(MFB_FIXTURES_DIR) + "/" + name);
}

const char* sample =
    "# a node with two boundary branches\n"
    "graph sample\n"
    "s0=13/3\n"
    "\n"
    "vertex c type=node m=2 pair=3,1 genus=0\n"
    "vertex p type=arrow m=2   # first branch\n"
    "vertex q type=arrow m=2\n"
    "edge e1 c p sign=+\n"
    "edge e2 c q sign=+ count=2 attach=0,1\n";

}

TEST_CASE("parsing a configuration file") {
    Document doc = parse_curve_graph(sample, "sample.mfb");
    const CurveGraph& g = doc.graph;
    CHECK(g.name == "sample");
    REQUIRE(g.s0.has_value());
    CHECK(*g.s0 == Rat(13, 3));
    REQUIRE(g.vertices.size() == 3);
    CHECK(g.vertices[0].id == "c");
    CHECK(g.vertices[0].pair == DivisorMult{3, 1});
    CHECK(g.vertices[1].kind == VertexKind::Arrowhead);
    CHECK(g.vertices[1].pair == DivisorMult{0, 1});
    REQUIRE(g.edges.size() == 2);
    CHECK(g.edges[0].count == 1);
    CHECK(g.edges[1].count == 2);
    CHECK(g.edges[1].attach2 == 1);
}

TEST_CASE("switch values are stored reduced") {
    Document doc = parse_curve_graph(
        "graph t\nvertex v type=node m=4 pair=6,1 genus=1 switches=5,-1\n");
    // gcd(4, 6) = 2: 5 -> 1, -1 -> 1
    CHECK(doc.graph.vertices[0].switches == std::vector<Int>{1, 1});
}

TEST_CASE("emission is parse-stable and byte-stable") {
    Document doc = parse_curve_graph(sample);
    std::string once = emit_graph(doc.graph);
    Document again = parse_curve_graph(once);
    CHECK(again.graph == doc.graph);
    CHECK(emit_graph(again.graph) == once);
    // defaults are omitted on output
    CHECK(once.find("count=1") == std::string::npos);
    CHECK(once.find("attach=0,0") == std::string::npos);
    CHECK(once.find("genus=0") != std::string::npos);
}

TEST_CASE("parse errors carry line and column") {
    auto check_fail = [](const std::string& text, int line, const char* fragment) {
        try {
            parse_curve_graph(text, "t.mfb");
            FAIL_CHECK("expected a parse error for: " << fragment);
        } catch (const parse_error& e) {
            CHECK(e.line == line);
            CHECK(std::string(e.what()).find(fragment) != std::string::npos);
            CHECK(std::string(e.what()).rfind("t.mfb:", 0) == 0);
        }
    };
    check_fail("vertex v type=node m=1 pair=1,1 genus=0\n", 1, "header");
    check_fail("graph t\nvertex v type=node m=x pair=1,1 genus=0\n", 2, "malformed integer");
    check_fail("graph t\nvertex v type=node m=1 pair=1 genus=0\n", 2, "pair");
    check_fail("graph t\nvertex v type=node m=1 pair=1,1 genus=0 m=2\n", 2, "duplicate key");
    check_fail("graph t\nvertex v type=node m=1 pair=1,1 genus=0 color=red\n", 2,
               "unknown key");
    check_fail("graph t\nvertex v type=arrow m=1 genus=0\n", 2, "arrowheads take no");
    check_fail("graph t\nvertex v type=tree m=1\n", 2, "type must be");
    check_fail("graph t\nvertex v type=node m=1 pair=1,1 genus=0\n"
               "edge e v ghost sign=+\n", 3, "unknown vertex 'ghost'");
    check_fail("graph t\nvertex v type=node m=1 pair=1,1 genus=0\n"
               "vertex w type=node m=1 pair=1,1 genus=0\nedge e v w sign=*\n", 4, "sign");
    check_fail("graph t\ns0=1/0\n", 2, "denominator");
    check_fail("graph t\ns0=3\n", 2, "s0 must be");
    check_fail("graph t\ns0=1/2\ns0=1/2\n", 3, "duplicate s0");
    check_fail("graph t\nfoo bar\n", 2, "unknown record");
    check_fail("graph t\ngraph u\n", 2, "duplicate 'graph'");
    check_fail("", 1, "missing 'graph");
}

TEST_CASE("column positions point into the offending token") {
    try {
        parse_curve_graph("graph t\nvertex v type=node m=1 pair=9q,1 genus=0\n", "t.mfb");
        FAIL_CHECK("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        // the pair value starts after "vertex v type=node m=1 pair="
        CHECK(e.column == 29);
    }
}

TEST_CASE("plumbing graphs parse and re-emit") {
    const char* text = "pvertex a euler=-2 genus=0\npvertex b euler=1 genus=2\n"
                       "pedge a b sign=-\n";
    PlumbGraph pg = parse_plumb_graph(text);
    CHECK(emit_graph(pg) == text);
    CHECK(pg.vertex("b").genus == 2);

    CHECK_THROWS_AS(parse_plumb_graph("pvertex a euler=0 genus=0\npedge a a sign=+\n"),
                    parse_error);
    CHECK_THROWS_AS(parse_plumb_graph("pedge a b sign=+\n"), parse_error);
    CHECK_THROWS_AS(parse_plumb_graph("pvertex a euler=0 genus=-1\n"), parse_error);
}

TEST_CASE("dot output draws parallel edges and dashed '-' edges") {
    Document doc = parse_curve_graph(sample);
    std::string dot = emit_graph(doc.graph, Format::Dot);
    // e2 has count=2: three '--' statements in total
    std::size_t n = 0;
    for (std::size_t p = dot.find("--"); p != std::string::npos; p = dot.find("--", p + 2))
        ++n;
    CHECK(n == 3);
    CHECK(dot.find("shape=plaintext") != std::string::npos);
    CHECK(dot.rfind("graph \"sample\" {", 0) == 0);

    PlumbGraph pg = parse_plumb_graph("pvertex a euler=0 genus=0\npvertex b euler=0 genus=0\n"
                                      "pedge a b sign=-\n");
    std::string pdot = emit_graph(pg, Format::Dot);
    CHECK(pdot.find("style=dashed") != std::string::npos);
}

TEST_CASE("report formats") {
    Document doc = parse_curve_graph("graph t\nvertex c type=node m=2 pair=3,1 genus=0\n");
    CHECK(emit_validation_report(validate(doc.graph)) == "valid\n");
    CHECK(emit_k_report(min_k(doc.graph)) ==
          "k=4\n"
          "  k is a positive even integer  [definition of k]\n"
          "  k*1 > 3  [vertex c]\n"
          "  4 | k*1  [vertex c]\n");
    CHECK(emit_hj_string(hj_string(2, 3, 1, 0, 1, 1)) ==
          "a=2 b=3 c=1 n1=0 n2=1 n3=1\n"
          "delta=2\n"
          "alpha=1\n"
          "coeffs=2\n"
          "mus=2,2,2\n");

    PlumbGraph pg = parse_plumb_graph("pvertex a euler=-2 genus=1\n");
    CHECK(emit_invariants(homology_invariants(pg)) ==
          "det=-2\nfactors=2\ncorank=0\ngenus_sum_doubled=2\ncycles=0\n");
}

TEST_CASE("pipeline runs the fixtures to their frozen outputs") {
    for (const char* name : {"isolated", "twoarrow", "minuschain", "cover2"}) {
        Document doc = parse_curve_graph(fixture(std::string(name) + ".mfb"),
                                         std::string(name) + ".mfb");
        PipelineOutcome out = pipeline(doc);
        CHECK(out.validation.ok());
        CHECK(out.k.has_value());
        CHECK(out.output == fixture(std::string(name) + ".expected"));
    }
}

TEST_CASE("pipeline stops at the requested stage") {
    Document doc = parse_curve_graph(fixture("twoarrow.mfb"), "twoarrow.mfb");
    PipelineOptions opt;
    opt.stop_after = PipelineOptions::Stage::Validate;
    CHECK(pipeline(doc, opt).output == "valid\n");
    opt.stop_after = PipelineOptions::Stage::Cover;
    CHECK(pipeline(doc, opt).output.rfind("cgraph twoarrow", 0) == 0);
    opt.stop_after = PipelineOptions::Stage::Mult;
    CHECK(pipeline(doc, opt).output.rfind("mgraph twoarrow", 0) == 0);
}

TEST_CASE("pipeline surfaces invalid input and bad decorations") {
    Document bad = parse_curve_graph(fixture("bad/loop.mfb"), "loop.mfb");
    PipelineOutcome out = pipeline(bad);
    CHECK(!out.validation.ok());
    CHECK(out.output.rfind("invalid\n", 0) == 0);
    CHECK(!out.k.has_value());

    Document odd = parse_curve_graph(fixture("bad/oddchi.mfb"), "oddchi.mfb");
    CHECK_THROWS_AS(pipeline(odd), decoration_error);
}
