#include "mfb/resolution.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "mfb/errors.hpp"

namespace mfb {

Int strict_transform_multiplicity(const Int& mf, const DivisorMult& pair) {
    return mf * pair.n / gcd(mf, pair.m);
}

Int strict_transform_multiplicity(const CurveVertex& v) {
    return strict_transform_multiplicity(v.mf, v.pair);
}

StringChain edge_string(const CurveGraph& g, const CurveEdge& e) {
    const CurveVertex& a = g.vertex(e.v1);
    const CurveVertex& b = g.vertex(e.v2);

    HJString hj;
    if (e.sign == EdgeSign::Plus) {
        Int m2 = a.mf;   // == b.mf
        Int d = gcd(gcd(m2, a.pair.m), b.pair.m);
        hj = hj_string(m2 / d, a.pair.m / d, b.pair.m / d, 0, a.pair.n, b.pair.n);
    } else {
        if (a.pair.m == 0)
            throw decoration_error("unsupported: '-' edge '" + e.id
                                   + "' whose shared divisor has m = 0");
        Int m1 = a.pair.m;   // a.pair == b.pair
        Int d = gcd(gcd(m1, a.mf), b.mf);
        hj = hj_string(m1 / d, a.mf / d, b.mf / d, a.pair.n, 0, 0);
    }

    StringChain sc;
    sc.sign = e.sign;
    sc.coeffs = hj.coeffs;
    sc.mults.assign(hj.mus.begin() + 1, hj.mus.end() - 1);
    sc.mu_v2 = hj.mus.front();
    sc.mu_v1 = hj.mus.back();
    return sc;
}

const MultVertex& MultGraph::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw input_error("unknown vertex '" + id + "'");
}

void MultGraph::sort_records() {
    std::sort(vertices.begin(), vertices.end(),
              [](const MultVertex& a, const MultVertex& b) { return a.id < b.id; });
    for (auto& e : edges)
        if (e.v2 < e.v1) std::swap(e.v1, e.v2);
    std::sort(edges.begin(), edges.end(), [](const MultEdge& a, const MultEdge& b) {
        return std::tie(a.v1, a.v2, a.sign) < std::tie(b.v1, b.v2, b.sign);
    });
}

MultGraph insert_strings(const CoveredGraph& cg) {
    MultGraph mg;
    mg.name = cg.name;

    std::map<std::string, Int> mult_of;
    for (const auto& cv : cg.vertices) {
        MultVertex v;
        v.id = cv.id;
        v.mult = strict_transform_multiplicity(cv.mf, cv.pair);
        if (cv.kind == VertexKind::Arrowhead) {
            v.kind = MultKind::Arrow;
        } else {
            v.kind = MultKind::Strict;
            v.genus = 1 - *cv.euler / 2;
        }
        mult_of[v.id] = v.mult;
        mg.vertices.push_back(std::move(v));
    }

    // the chain depends only on the base edge; covered copies share it
    std::map<std::string, StringChain> chains;
    for (const auto& e : cg.base.edges)
        chains.emplace(e.id, edge_string(cg.base, e));

    for (const auto& ce : cg.edges) {
        const StringChain& sc = chains.at(ce.base);
        if (mult_of.at(ce.v1) != sc.mu_v1 || mult_of.at(ce.v2) != sc.mu_v2)
            throw decoration_error("multiplicity mismatch between edge '" + ce.id
                                   + "' and its endpoints");
        if (sc.coeffs.empty()) {
            mg.edges.push_back({ce.v1, ce.v2, ce.sign});
            continue;
        }
        std::string prev = ce.v2;
        for (std::size_t i = 0; i < sc.coeffs.size(); ++i) {
            if (sc.mults[i] < 1)
                throw std::logic_error("insert_strings: chain multiplicity < 1 on '"
                                       + ce.id + "'");
            MultVertex v;
            v.id = ce.id + ".s" + std::to_string(i + 1);
            v.kind = MultKind::Chain;
            v.mult = sc.mults[i];
            mg.edges.push_back({prev, v.id, ce.sign});
            prev = v.id;
            mg.vertices.push_back(std::move(v));
        }
        mg.edges.push_back({prev, ce.v1, ce.sign});
    }

    mg.sort_records();
    return mg;
}

}
