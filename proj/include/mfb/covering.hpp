#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfb/curvegraph.hpp"

namespace mfb {

// One connected component of the preimage of a base curve in the cyclic
// covering. Decorations needed downstream (mf, pair) are copied from the
// base vertex; euler is set for node copies only.
struct CoveredVertex {
    std::string id;      // "<base>.<index>"
    std::string base;
    Int index;           // 0 .. n_base - 1
    VertexKind kind = VertexKind::Node;
    Int mf;
    DivisorMult pair{0, 1};
    std::optional<Int> euler;
};

// One double point over a base double point. copy selects the parallel
// instance of the base record, index is the position j in the fiber; the
// endpoints are copies (attach1 + j) mod n_v1 and (attach2 + j) mod n_v2.
struct CoveredEdge {
    std::string id;      // "<base>.<copy>.<index>"
    std::string base;
    Int copy;
    Int index;
    std::string v1, v2;
    Int i1, i2;          // fiber indices of the endpoints
    EdgeSign sign = EdgeSign::Plus;
};

struct CoveredGraph {
    std::string name;
    CurveGraph base;
    std::vector<CoveredVertex> vertices;   // sorted by id
    std::vector<CoveredEdge> edges;        // sorted by id

    const CoveredVertex& vertex(const std::string& id) const;   // throws input_error
};

// Number of components over a curve: gcd of mf, pair.m, the third divisor
// multiplicities at all incident double points, and the switches. For
// arrowheads pair.m == 0 drops out of the gcd.
Int component_count(const CurveGraph& g, const CurveVertex& v);

// Number of double points over one double point: gcd of the three divisor
// multiplicities meeting there.
Int edge_fiber_count(const CurveGraph& g, const CurveEdge& e);

// Euler characteristic of each component over a node. Throws
// decoration_error when the decorations admit no covering (non-integral,
// odd, or > 2).
Int euler_char(const CurveGraph& g, const CurveVertex& v);

// Assembles the covering graph. Throws decoration_error on unrealizable
// decorations. Requires a graph that passed validate().
CoveredGraph build_covering(const CurveGraph& g);

}
