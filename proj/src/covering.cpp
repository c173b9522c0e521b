#include "mfb/covering.hpp"

#include <algorithm>

#include "mfb/errors.hpp"

namespace mfb {

const CoveredVertex& CoveredGraph::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    throw input_error("unknown covered vertex '" + id + "'");
}

Int component_count(const CurveGraph& g, const CurveVertex& v) {
    Int n = gcd(v.mf, v.pair.m);
    for (const auto& e : g.edges) {
        if (e.v1 == v.id) n = gcd(n, third_divisor(g, e, 0).m);
        if (e.v2 == v.id) n = gcd(n, third_divisor(g, e, 1).m);
    }
    for (const auto& s : v.switches) n = gcd(n, s);
    return n;
}

Int edge_fiber_count(const CurveGraph& g, const CurveEdge& e) {
    const CurveVertex& a = g.vertex(e.v1);
    const CurveVertex& b = g.vertex(e.v2);
    if (e.sign == EdgeSign::Plus)
        return gcd(gcd(a.mf, a.pair.m), b.pair.m);   // a.mf == b.mf
    return gcd(gcd(a.pair.m, a.mf), b.mf);           // a.pair == b.pair
}

Int euler_char(const CurveGraph& g, const CurveVertex& v) {
    Int d = gcd(v.mf, v.pair.m);
    Int incident = 0;     // double points on v, counted with multiplicity
    Int fiber_sum = 0;
    for (const auto& e : g.edges) {
        if (e.v1 != v.id && e.v2 != v.id) continue;
        incident += e.count;
        fiber_sum += e.count * edge_fiber_count(g, e);
    }
    Int n = component_count(g, v);
    Int num = (2 - 2 * v.genus - incident) * d + fiber_sum;
    if (num % n != 0)
        throw decoration_error("unrealizable decoration at vertex '" + v.id
                               + "': Euler characteristic is not an integer");
    Int chi = num / n;
    if (chi % 2 != 0)
        throw decoration_error("unrealizable decoration at vertex '" + v.id
                               + "': Euler characteristic is odd");
    if (chi > 2)
        throw decoration_error("unrealizable decoration at vertex '" + v.id
                               + "': Euler characteristic exceeds 2");
    return chi;
}

CoveredGraph build_covering(const CurveGraph& g) {
    CoveredGraph out;
    out.name = g.name;
    out.base = g;

    for (const auto& v : g.vertices) {
        Int n = component_count(g, v);
        std::optional<Int> chi;
        if (v.kind == VertexKind::Node) chi = euler_char(g, v);
        for (Int i = 0; i < n; ++i) {
            CoveredVertex cv;
            cv.id = v.id + "." + i.str();
            cv.base = v.id;
            cv.index = i;
            cv.kind = v.kind;
            cv.mf = v.mf;
            cv.pair = v.pair;
            cv.euler = chi;
            out.vertices.push_back(std::move(cv));
        }
    }

    for (const auto& e : g.edges) {
        Int n1 = component_count(g, g.vertex(e.v1));
        Int n2 = component_count(g, g.vertex(e.v2));
        Int d = edge_fiber_count(g, e);
        if (d % lcm(n1, n2) != 0)
            throw decoration_error("unrealizable decoration at edge '" + e.id
                                   + "': fiber count is not a multiple of lcm of the"
                                     " endpoint component counts");
        for (Int t = 0; t < e.count; ++t) {
            for (Int j = 0; j < d; ++j) {
                CoveredEdge ce;
                ce.id = e.id + "." + t.str() + "." + j.str();
                ce.base = e.id;
                ce.copy = t;
                ce.index = j;
                ce.i1 = mod_norm(e.attach1 + j, n1);
                ce.i2 = mod_norm(e.attach2 + j, n2);
                ce.v1 = e.v1 + "." + ce.i1.str();
                ce.v2 = e.v2 + "." + ce.i2.str();
                ce.sign = e.sign;
                out.edges.push_back(std::move(ce));
            }
        }
    }

    std::sort(out.vertices.begin(), out.vertices.end(),
              [](const CoveredVertex& a, const CoveredVertex& b) { return a.id < b.id; });
    std::sort(out.edges.begin(), out.edges.end(),
              [](const CoveredEdge& a, const CoveredEdge& b) { return a.id < b.id; });
    return out;
}

}
