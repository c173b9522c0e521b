#include "mfb/curvegraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "mfb/errors.hpp"

namespace mfb {

DivClass DivisorMult::cls() const {
    if (n == 0) return DivClass::F;
    if (m == 0) return DivClass::G;
    return DivClass::O;
}

const CurveVertex* CurveGraph::find_vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

const CurveVertex& CurveGraph::vertex(const std::string& id) const {
    const CurveVertex* v = find_vertex(id);
    if (!v) throw input_error("unknown vertex '" + id + "'");
    return *v;
}

void CurveGraph::sort_records() {
    std::sort(vertices.begin(), vertices.end(),
              [](const CurveVertex& a, const CurveVertex& b) { return a.id < b.id; });
    std::sort(edges.begin(), edges.end(),
              [](const CurveEdge& a, const CurveEdge& b) { return a.id < b.id; });
}

bool operator==(const DivisorMult& a, const DivisorMult& b) {
    return a.m == b.m && a.n == b.n;
}

bool operator==(const CurveVertex& a, const CurveVertex& b) {
    return a.id == b.id && a.kind == b.kind && a.mf == b.mf && a.pair == b.pair
        && a.genus == b.genus && a.switches == b.switches;
}

bool operator==(const CurveEdge& a, const CurveEdge& b) {
    return a.id == b.id && a.v1 == b.v1 && a.v2 == b.v2 && a.sign == b.sign
        && a.count == b.count && a.attach1 == b.attach1 && a.attach2 == b.attach2;
}

bool operator==(const CurveGraph& a, const CurveGraph& b) {
    return a.name == b.name && a.s0 == b.s0 && a.vertices == b.vertices && a.edges == b.edges;
}

DivisorMult third_divisor(const CurveGraph& g, const CurveEdge& e, int end) {
    const CurveVertex& other = g.vertex(end == 0 ? e.v2 : e.v1);
    if (e.sign == EdgeSign::Plus) return other.pair;
    return DivisorMult{other.mf, 0};
}

ValidationReport validate(const CurveGraph& g) {
    ValidationReport rep;
    auto error = [&](const std::string& where, const std::string& msg) {
        rep.errors.push_back({where, msg});
    };
    auto warning = [&](const std::string& where, const std::string& msg) {
        rep.warnings.push_back({where, msg});
    };

    std::set<std::string> vertex_ids, edge_ids;
    for (const auto& v : g.vertices) {
        std::string where = "vertex " + v.id;
        if (!vertex_ids.insert(v.id).second) error(where, "duplicate vertex id");
        if (v.mf < 1) error(where, "m must be >= 1");
        if (v.kind == VertexKind::Node) {
            if (v.pair.m < 1 || v.pair.n < 1)
                error(where, "node pair must have m >= 1 and n >= 1");
            if (v.genus < 0) error(where, "genus must be >= 0");
            if (Int(v.switches.size()) != 2 * v.genus)
                error(where, "expected 2*genus switch values");
        } else {
            if (!(v.pair == DivisorMult{0, 1}))
                error(where, "arrowhead pair must be (0, 1)");
            if (v.genus != 0 || !v.switches.empty())
                error(where, "arrowheads carry no genus and no switches");
        }
    }

    // one warning per vertex pair joined by edges of both signs
    std::map<std::pair<std::string, std::string>, std::set<EdgeSign>> pair_signs;

    for (const auto& e : g.edges) {
        std::string where = "edge " + e.id;
        if (!edge_ids.insert(e.id).second) error(where, "duplicate edge id");
        const CurveVertex* a = g.find_vertex(e.v1);
        const CurveVertex* b = g.find_vertex(e.v2);
        if (!a) error(where, "unknown endpoint '" + e.v1 + "'");
        if (!b) error(where, "unknown endpoint '" + e.v2 + "'");
        if (e.count < 1) error(where, "count must be >= 1");
        if (e.v1 == e.v2) {
            error(where, "loop edges are not allowed");
            continue;
        }
        if (!a || !b) continue;

        if (e.sign == EdgeSign::Plus) {
            if (a->mf != b->mf)
                error(where, "'+' edge endpoints must share m");
        } else {
            if (!(a->pair == b->pair))
                error(where, "'-' edge endpoints must share the pair (m, n)");
            else if (a->pair.cls() == DivClass::G)
                warning(where, "shared divisor of '-' edge has m = 0; resolution rejects this");
        }
        auto key = std::minmax(e.v1, e.v2);
        pair_signs[{key.first, key.second}].insert(e.sign);
    }

    for (const auto& [key, signs] : pair_signs)
        if (signs.size() > 1)
            warning("graph", "edges between '" + key.first + "' and '" + key.second
                             + "' mix signs");
    return rep;
}

CurveGraph star(const CurveGraph& g, const std::string& vertex_id) {
    const CurveVertex& center = g.vertex(vertex_id);
    CurveGraph out;
    out.name = g.name;
    out.s0 = g.s0;
    std::set<std::string> keep{center.id};
    for (const auto& e : g.edges) {
        if (e.v1 != vertex_id && e.v2 != vertex_id) continue;
        out.edges.push_back(e);
        keep.insert(e.v1);
        keep.insert(e.v2);
    }
    for (const auto& v : g.vertices)
        if (keep.count(v.id)) out.vertices.push_back(v);
    out.sort_records();
    return out;
}

bool KConstraint::holds(const Int& k) const {
    switch (kind) {
    case Kind::EvenPositive: return k >= 2 && k % 2 == 0;
    case Kind::PairBound: return k * n > m;
    case Kind::FiberDivisibility: return (k * n) % (2 * m) == 0;
    case Kind::SlopeBound: return Rat(k) > bound;
    }
    return false;
}

KReport min_k(const CurveGraph& g) {
    KReport rep;
    // dedup by constraint content, merging witnesses
    std::map<std::tuple<int, Int, Int>, std::size_t> seen;
    auto add = [&](KConstraint::Kind kind, const Int& m, const Int& n,
                   const std::string& witness) {
        auto key = std::make_tuple(static_cast<int>(kind), m, n);
        auto it = seen.find(key);
        if (it == seen.end()) {
            KConstraint c;
            c.kind = kind;
            c.m = m;
            c.n = n;
            c.witnesses.push_back(witness);
            seen.emplace(key, rep.constraints.size());
            rep.constraints.push_back(std::move(c));
        } else {
            auto& w = rep.constraints[it->second].witnesses;
            if (std::find(w.begin(), w.end(), witness) == w.end()) w.push_back(witness);
        }
    };

    add(KConstraint::Kind::EvenPositive, 0, 0, "definition of k");
    for (const auto& v : g.vertices) {
        if (v.kind != VertexKind::Node) continue;
        if (v.pair.n < 1) throw input_error("min_k: vertex '" + v.id + "' has pair n < 1");
        add(KConstraint::Kind::PairBound, v.pair.m, v.pair.n, "vertex " + v.id);
        add(KConstraint::Kind::FiberDivisibility, v.mf, v.pair.n, "vertex " + v.id);
    }
    for (const auto& e : g.edges) {
        for (int end = 0; end < 2; ++end) {
            DivisorMult third = third_divisor(g, e, end);
            if (third.cls() != DivClass::O) continue;
            const std::string& at = end == 0 ? e.v1 : e.v2;
            std::string witness = "edge " + e.id + " at vertex " + at;
            add(KConstraint::Kind::PairBound, third.m, third.n, witness);
            if (e.sign == EdgeSign::Plus)
                add(KConstraint::Kind::FiberDivisibility, g.vertex(at).mf, third.n, witness);
        }
    }
    if (g.s0) {
        KConstraint c;
        c.kind = KConstraint::Kind::SlopeBound;
        c.bound = *g.s0;
        c.witnesses.push_back("slope bound s0");
        rep.constraints.push_back(std::move(c));
    }

    for (Int k = 2;; k += 2) {
        bool all = true;
        for (const auto& c : rep.constraints)
            if (!c.holds(k)) { all = false; break; }
        if (all) {
            rep.k = k;
            return rep;
        }
    }
}

}
