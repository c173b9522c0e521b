#include "mfb/io.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "mfb/errors.hpp"

namespace mfb {

namespace {

struct Token {
    std::string text;
    int column;   // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) { ++i; continue; }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))
               && line[i] != '#')
            ++i;
        toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return toks;
}

bool valid_id(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalnum(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-')
            return false;
    return true;
}

bool looks_like_int(const std::string& s) {
    std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

struct LineParser {
    const std::string& source;
    int lineno;

    [[noreturn]] void fail(int column, const std::string& msg) const {
        throw parse_error(source, lineno, column, msg);
    }

    Int integer(const std::string& s, int column) const {
        if (!looks_like_int(s)) fail(column, "malformed integer '" + s + "'");
        return Int(s);
    }

    std::string id(const Token& t, const char* what) const {
        if (!valid_id(t.text))
            fail(t.column, std::string("invalid ") + what + " '" + t.text + "'");
        return t.text;
    }

    // splits "a,b,..." at commas
    std::vector<Int> int_list(const std::string& s, int column) const {
        std::vector<Int> out;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = s.find(',', start);
            std::string part = s.substr(start, comma == std::string::npos
                                                    ? std::string::npos
                                                    : comma - start);
            out.push_back(integer(part, column + static_cast<int>(start)));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return out;
    }
};

// key=value fields after the positional tokens
struct Fields {
    const LineParser& lp;
    std::map<std::string, Token> kv;

    Fields(const LineParser& lp_, const std::vector<Token>& toks, std::size_t from,
           const std::set<std::string>& allowed)
        : lp(lp_) {
        for (std::size_t i = from; i < toks.size(); ++i) {
            std::size_t eq = toks[i].text.find('=');
            if (eq == std::string::npos || eq == 0)
                lp.fail(toks[i].column, "expected key=value, got '" + toks[i].text + "'");
            std::string key = toks[i].text.substr(0, eq);
            if (!allowed.count(key)) lp.fail(toks[i].column, "unknown key '" + key + "'");
            Token val{toks[i].text.substr(eq + 1),
                      toks[i].column + static_cast<int>(eq) + 1};
            if (!kv.emplace(key, val).second)
                lp.fail(toks[i].column, "duplicate key '" + key + "'");
        }
    }

    const Token& require(const std::string& key, int line_col) const {
        auto it = kv.find(key);
        if (it == kv.end()) lp.fail(line_col, "missing key '" + key + "'");
        return it->second;
    }
    const Token* get(const std::string& key) const {
        auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    }
};

EdgeSign parse_sign(const LineParser& lp, const Token& t) {
    if (t.text == "+") return EdgeSign::Plus;
    if (t.text == "-") return EdgeSign::Minus;
    lp.fail(t.column, "sign must be '+' or '-'");
}

std::string join(const std::vector<Int>& xs, const char* sep) {
    std::ostringstream out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << sep;
        out << xs[i];
    }
    return out.str();
}

const char* sign_str(EdgeSign s) { return s == EdgeSign::Plus ? "+" : "-"; }

}

Document parse_curve_graph(const std::string& text, const std::string& source) {
    CurveGraph g;
    bool have_header = false, have_s0 = false;
    std::set<std::string> vertex_ids, edge_ids;
    std::vector<std::pair<int, int>> edge_pos;   // line/column per edge, for the endpoint check

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineParser lp{source, lineno};
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "graph") {
            if (have_header) lp.fail(toks[0].column, "duplicate 'graph' header");
            if (toks.size() != 2) lp.fail(toks[0].column, "expected 'graph <name>'");
            g.name = lp.id(toks[1], "graph name");
            have_header = true;
            continue;
        }
        if (!have_header) lp.fail(toks[0].column, "expected 'graph <name>' header first");

        if (head.rfind("s0=", 0) == 0) {
            if (toks.size() != 1) lp.fail(toks[1].column, "unexpected token after s0");
            if (have_s0) lp.fail(toks[0].column, "duplicate s0");
            std::string val = head.substr(3);
            std::size_t slash = val.find('/');
            if (slash == std::string::npos)
                lp.fail(toks[0].column, "s0 must be <int>/<int>");
            Int num = lp.integer(val.substr(0, slash), toks[0].column + 3);
            Int den = lp.integer(val.substr(slash + 1),
                                 toks[0].column + 3 + static_cast<int>(slash) + 1);
            if (den == 0) lp.fail(toks[0].column, "s0 denominator must be nonzero");
            g.s0 = Rat(num, den);
            have_s0 = true;
            continue;
        }

        if (head == "vertex") {
            if (toks.size() < 3) lp.fail(toks[0].column, "expected 'vertex <id> type=...'");
            CurveVertex v;
            v.id = lp.id(toks[1], "vertex id");
            if (!vertex_ids.insert(v.id).second)
                lp.fail(toks[1].column, "duplicate vertex id '" + v.id + "'");
            Fields f(lp, toks, 2, {"type", "m", "pair", "genus", "switches"});
            const Token& type = f.require("type", toks[0].column);
            const Token& m = f.require("m", toks[0].column);
            v.mf = lp.integer(m.text, m.column);
            if (type.text == "node") {
                v.kind = VertexKind::Node;
                const Token& pair = f.require("pair", toks[0].column);
                auto mn = lp.int_list(pair.text, pair.column);
                if (mn.size() != 2) lp.fail(pair.column, "pair must be <int>,<int>");
                v.pair = DivisorMult{mn[0], mn[1]};
                const Token& genus = f.require("genus", toks[0].column);
                v.genus = lp.integer(genus.text, genus.column);
                if (const Token* sw = f.get("switches"))
                    v.switches = lp.int_list(sw->text, sw->column);
                // switches live mod the sheet count at generic points
                Int d = gcd(v.mf, v.pair.m);
                if (d >= 1)
                    for (auto& s : v.switches) s = mod_norm(s, d);
            } else if (type.text == "arrow") {
                v.kind = VertexKind::Arrowhead;
                v.pair = DivisorMult{0, 1};
                for (const char* key : {"pair", "genus", "switches"})
                    if (f.get(key))
                        lp.fail(type.column, std::string("arrowheads take no '") + key + "'");
            } else {
                lp.fail(type.column, "type must be 'node' or 'arrow'");
            }
            g.vertices.push_back(std::move(v));
            continue;
        }

        if (head == "edge") {
            if (toks.size() < 5)
                lp.fail(toks[0].column, "expected 'edge <id> <v1> <v2> sign=...'");
            CurveEdge e;
            e.id = lp.id(toks[1], "edge id");
            if (!edge_ids.insert(e.id).second)
                lp.fail(toks[1].column, "duplicate edge id '" + e.id + "'");
            e.v1 = lp.id(toks[2], "vertex id");
            e.v2 = lp.id(toks[3], "vertex id");
            Fields f(lp, toks, 4, {"sign", "count", "attach"});
            e.sign = parse_sign(lp, f.require("sign", toks[0].column));
            if (const Token* c = f.get("count")) e.count = lp.integer(c->text, c->column);
            if (const Token* at = f.get("attach")) {
                auto ab = lp.int_list(at->text, at->column);
                if (ab.size() != 2) lp.fail(at->column, "attach must be <int>,<int>");
                e.attach1 = ab[0];
                e.attach2 = ab[1];
            }
            edge_pos.emplace_back(lineno, toks[2].column);
            g.edges.push_back(std::move(e));
            continue;
        }

        lp.fail(toks[0].column, "unknown record '" + head + "'");
    }
    if (!have_header) throw parse_error(source, 1, 1, "missing 'graph <name>' header");

    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        for (const std::string* v : {&g.edges[i].v1, &g.edges[i].v2})
            if (!vertex_ids.count(*v))
                throw parse_error(source, edge_pos[i].first, edge_pos[i].second,
                                  "unknown vertex '" + *v + "'");
    }
    g.sort_records();
    return Document{source, std::move(g)};
}

PlumbGraph parse_plumb_graph(const std::string& text, const std::string& source) {
    PlumbGraph g;
    std::set<std::string> ids;
    std::vector<std::tuple<int, int, std::string>> refs;   // line, column, id

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        LineParser lp{source, lineno};
        auto toks = tokenize(line);
        if (toks.empty()) continue;
        const std::string& head = toks[0].text;

        if (head == "pvertex") {
            if (toks.size() < 2) lp.fail(toks[0].column, "expected 'pvertex <id> ...'");
            PlumbVertex v;
            v.id = lp.id(toks[1], "vertex id");
            if (!ids.insert(v.id).second)
                lp.fail(toks[1].column, "duplicate vertex id '" + v.id + "'");
            Fields f(lp, toks, 2, {"euler", "genus"});
            const Token& e = f.require("euler", toks[0].column);
            const Token& ge = f.require("genus", toks[0].column);
            v.euler = lp.integer(e.text, e.column);
            v.genus = lp.integer(ge.text, ge.column);
            if (v.genus < 0) lp.fail(ge.column, "genus must be >= 0");
            g.vertices.push_back(std::move(v));
            continue;
        }
        if (head == "pedge") {
            if (toks.size() < 4) lp.fail(toks[0].column, "expected 'pedge <v1> <v2> sign=...'");
            PlumbEdge e;
            e.v1 = lp.id(toks[1], "vertex id");
            e.v2 = lp.id(toks[2], "vertex id");
            if (e.v1 == e.v2) lp.fail(toks[2].column, "loop edges are not allowed");
            Fields f(lp, toks, 3, {"sign"});
            e.sign = parse_sign(lp, f.require("sign", toks[0].column));
            refs.emplace_back(lineno, toks[1].column, e.v1);
            refs.emplace_back(lineno, toks[2].column, e.v2);
            g.edges.push_back(std::move(e));
            continue;
        }
        lp.fail(toks[0].column, "unknown record '" + head + "'");
    }
    for (const auto& [l, c, id] : refs)
        if (!ids.count(id)) throw parse_error(source, l, c, "unknown vertex '" + id + "'");
    g.sort_records();
    return g;
}

namespace {

struct DotNode {
    std::string id;
    std::string label;
    bool plain = false;   // arrowheads render without a circle
};

struct DotEdge {
    std::string v1, v2;
    EdgeSign sign;
};

std::string emit_dot(const std::string& name, const std::vector<DotNode>& nodes,
                     const std::vector<DotEdge>& edges) {
    std::ostringstream out;
    out << "graph \"" << name << "\" {\n";
    for (const auto& n : nodes) {
        out << "  \"" << n.id << "\" [label=\"" << n.label << "\"";
        if (n.plain) out << ", shape=plaintext";
        out << "];\n";
    }
    for (const auto& e : edges) {
        out << "  \"" << e.v1 << "\" -- \"" << e.v2 << "\"";
        if (e.sign == EdgeSign::Minus) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}

std::string emit_graph(const CurveGraph& g, Format f) {
    CurveGraph s = g;
    s.sort_records();
    if (f == Format::Dot) {
        std::vector<DotNode> nodes;
        for (const auto& v : s.vertices) {
            if (v.kind == VertexKind::Node) {
                std::ostringstream l;
                l << "(" << v.mf << ";" << v.pair.m << "," << v.pair.n << ") g=" << v.genus;
                if (!v.switches.empty()) l << " sw=" << join(v.switches, ",");
                nodes.push_back({v.id, l.str(), false});
            } else {
                nodes.push_back({v.id, "m=" + v.mf.str() + " ->", true});
            }
        }
        std::vector<DotEdge> edges;
        for (const auto& e : s.edges)
            for (Int t = 0; t < e.count; ++t) edges.push_back({e.v1, e.v2, e.sign});
        return emit_dot(s.name, nodes, edges);
    }
    std::ostringstream out;
    out << "graph " << s.name << "\n";
    if (s.s0)
        out << "s0=" << boost::multiprecision::numerator(*s.s0) << "/"
            << boost::multiprecision::denominator(*s.s0) << "\n";
    for (const auto& v : s.vertices) {
        if (v.kind == VertexKind::Node) {
            out << "vertex " << v.id << " type=node m=" << v.mf << " pair=" << v.pair.m
                << "," << v.pair.n << " genus=" << v.genus;
            if (!v.switches.empty()) out << " switches=" << join(v.switches, ",");
            out << "\n";
        } else {
            out << "vertex " << v.id << " type=arrow m=" << v.mf << "\n";
        }
    }
    for (const auto& e : s.edges) {
        out << "edge " << e.id << " " << e.v1 << " " << e.v2 << " sign=" << sign_str(e.sign);
        if (e.count != 1) out << " count=" << e.count;
        if (e.attach1 != 0 || e.attach2 != 0)
            out << " attach=" << e.attach1 << "," << e.attach2;
        out << "\n";
    }
    return out.str();
}

std::string emit_graph(const CoveredGraph& g, Format f) {
    if (f == Format::Dot) {
        std::vector<DotNode> nodes;
        for (const auto& v : g.vertices) {
            std::ostringstream l;
            l << v.base << "[" << v.index << "]";
            if (v.kind == VertexKind::Node)
                l << " chi=" << *v.euler;
            else
                l << " ->";
            nodes.push_back({v.id, l.str(), v.kind == VertexKind::Arrowhead});
        }
        std::vector<DotEdge> edges;
        for (const auto& e : g.edges) edges.push_back({e.v1, e.v2, e.sign});
        return emit_dot(g.name, nodes, edges);
    }
    std::ostringstream out;
    out << "cgraph " << g.name << "\n";
    for (const auto& v : g.vertices) {
        out << "cvertex " << v.id << " base=" << v.base << " index=" << v.index;
        if (v.kind == VertexKind::Node)
            out << " type=node m=" << v.mf << " pair=" << v.pair.m << "," << v.pair.n
                << " euler=" << *v.euler;
        else
            out << " type=arrow m=" << v.mf;
        out << "\n";
    }
    for (const auto& e : g.edges)
        out << "cedge " << e.id << " base=" << e.base << " copy=" << e.copy
            << " index=" << e.index << " " << e.v1 << " " << e.v2
            << " sign=" << sign_str(e.sign) << "\n";
    return out.str();
}

std::string emit_graph(const MultGraph& g, Format f) {
    MultGraph s = g;
    s.sort_records();
    if (f == Format::Dot) {
        std::vector<DotNode> nodes;
        for (const auto& v : s.vertices) {
            std::ostringstream l;
            l << "mu=" << v.mult;
            if (v.kind == MultKind::Strict) l << " g=" << v.genus;
            if (v.kind == MultKind::Arrow) l << " ->";
            nodes.push_back({v.id, l.str(), v.kind == MultKind::Arrow});
        }
        std::vector<DotEdge> edges;
        for (const auto& e : s.edges) edges.push_back({e.v1, e.v2, e.sign});
        return emit_dot(s.name, nodes, edges);
    }
    std::ostringstream out;
    out << "mgraph " << s.name << "\n";
    for (const auto& v : s.vertices) {
        out << "mvertex " << v.id << " kind=";
        switch (v.kind) {
        case MultKind::Strict: out << "strict mult=" << v.mult << " genus=" << v.genus; break;
        case MultKind::Chain: out << "chain mult=" << v.mult << " genus=0"; break;
        case MultKind::Arrow: out << "arrow mult=" << v.mult; break;
        }
        out << "\n";
    }
    for (const auto& e : s.edges)
        out << "medge " << e.v1 << " " << e.v2 << " sign=" << sign_str(e.sign) << "\n";
    return out.str();
}

std::string emit_graph(const PlumbGraph& g, Format f) {
    PlumbGraph s = g;
    s.sort_records();
    if (f == Format::Dot) {
        std::vector<DotNode> nodes;
        for (const auto& v : s.vertices)
            nodes.push_back({v.id, "e=" + v.euler.str() + " g=" + v.genus.str(), false});
        std::vector<DotEdge> edges;
        for (const auto& e : s.edges) edges.push_back({e.v1, e.v2, e.sign});
        return emit_dot(s.name, nodes, edges);
    }
    std::ostringstream out;
    for (const auto& v : s.vertices)
        out << "pvertex " << v.id << " euler=" << v.euler << " genus=" << v.genus << "\n";
    for (const auto& e : s.edges)
        out << "pedge " << e.v1 << " " << e.v2 << " sign=" << sign_str(e.sign) << "\n";
    return out.str();
}

std::string emit_validation_report(const ValidationReport& r) {
    std::ostringstream out;
    out << (r.ok() ? "valid" : "invalid") << "\n";
    for (const auto& i : r.errors) out << "error " << i.where << ": " << i.message << "\n";
    for (const auto& i : r.warnings) out << "warning " << i.where << ": " << i.message << "\n";
    return out.str();
}

std::string emit_k_report(const KReport& r) {
    std::ostringstream out;
    out << "k=" << r.k << "\n";
    for (const auto& c : r.constraints) {
        out << "  ";
        switch (c.kind) {
        case KConstraint::Kind::EvenPositive:
            out << "k is a positive even integer";
            break;
        case KConstraint::Kind::PairBound:
            out << "k*" << c.n << " > " << c.m;
            break;
        case KConstraint::Kind::FiberDivisibility:
            out << 2 * c.m << " | k*" << c.n;
            break;
        case KConstraint::Kind::SlopeBound:
            out << "k > " << boost::multiprecision::numerator(c.bound) << "/"
                << boost::multiprecision::denominator(c.bound);
            break;
        }
        out << "  [";
        for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
            if (i) out << "; ";
            out << c.witnesses[i];
        }
        out << "]\n";
    }
    return out.str();
}

std::string emit_invariants(const HomologyInvariants& inv) {
    std::ostringstream out;
    out << "det=" << inv.det << "\n";
    out << "factors=" << join(inv.factors, ",") << "\n";
    out << "corank=" << inv.corank << "\n";
    out << "genus_sum_doubled=" << inv.genus_sum_doubled << "\n";
    out << "cycles=" << inv.cycle_count << "\n";
    return out.str();
}

std::string emit_hj_string(const HJString& s) {
    std::ostringstream out;
    out << "a=" << s.a << " b=" << s.b << " c=" << s.c << " n1=" << s.n1 << " n2=" << s.n2
        << " n3=" << s.n3 << "\n";
    out << "delta=" << s.delta << "\n";
    out << "alpha=" << s.alpha << "\n";
    out << "coeffs=" << join(s.coeffs, ",") << "\n";
    out << "mus=" << join(s.mus, ",") << "\n";
    return out.str();
}

PipelineOutcome pipeline(const Document& doc, const PipelineOptions& opt) {
    PipelineOutcome out;
    out.validation = validate(doc.graph);
    if (!out.validation.ok() || opt.stop_after == PipelineOptions::Stage::Validate) {
        out.output = emit_validation_report(out.validation);
        return out;
    }
    out.k = min_k(doc.graph);
    CoveredGraph cg = build_covering(doc.graph);
    if (opt.stop_after == PipelineOptions::Stage::Cover) {
        out.output = emit_graph(cg, opt.format);
        return out;
    }
    MultGraph mg = insert_strings(cg);
    if (opt.stop_after == PipelineOptions::Stage::Mult) {
        out.output = emit_graph(mg, opt.format);
        return out;
    }
    out.output = emit_graph(compute_self_intersections(mg), opt.format);
    return out;
}

}
