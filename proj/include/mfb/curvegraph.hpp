#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfb/ints.hpp"

namespace mfb {

// Divisor class, determined by the multiplicity pair (m, n):
//   F: n == 0, m >= 1   (component of the function divisor)
//   O: m >= 1, n >= 1   (component meeting the function divisor)
//   G: m == 0, n == 1   (boundary component; arrowhead pairs)
enum class DivClass { F, O, G };

struct DivisorMult {
    Int m;
    Int n;
    DivClass cls() const;
};

enum class VertexKind { Node, Arrowhead };
enum class EdgeSign { Plus, Minus };

// A vertex is a curve together with the multiplicities of the two divisors it
// lies on: mf for the F-divisor, pair for the second one (class O for nodes,
// the fixed pair (0, 1) for arrowheads). switches holds 2*genus monodromy
// shifts, stored reduced mod gcd(mf, pair.m).
struct CurveVertex {
    std::string id;
    VertexKind kind = VertexKind::Node;
    Int mf;
    DivisorMult pair{0, 1};
    Int genus = 0;
    std::vector<Int> switches;
};

// A double point of the configuration. Endpoint order is semantic: the chain
// inserted for this edge keeps its mu_{l+1} end at v1 and its mu_0 end at v2.
// count parallel double points share one record; attach1/attach2 are the
// covering fiber offsets at v1/v2.
struct CurveEdge {
    std::string id;
    std::string v1, v2;
    EdgeSign sign = EdgeSign::Plus;
    Int count = 1;
    Int attach1 = 0, attach2 = 0;
};

struct CurveGraph {
    std::string name;
    std::optional<Rat> s0;   // optional slope bound consumed by min_k only
    std::vector<CurveVertex> vertices;   // sorted by id
    std::vector<CurveEdge> edges;        // sorted by id

    const CurveVertex* find_vertex(const std::string& id) const;
    const CurveVertex& vertex(const std::string& id) const;   // throws input_error
    void sort_records();
};

bool operator==(const DivisorMult&, const DivisorMult&);
bool operator==(const CurveVertex&, const CurveVertex&);
bool operator==(const CurveEdge&, const CurveEdge&);
bool operator==(const CurveGraph&, const CurveGraph&);

struct Issue {
    std::string where;     // "vertex a", "edge e1", or "graph"
    std::string message;
};

struct ValidationReport {
    std::vector<Issue> errors;
    std::vector<Issue> warnings;
    bool ok() const { return errors.empty(); }
};

ValidationReport validate(const CurveGraph& g);

// The divisor met by the other branch at the given end of an edge (end is 0
// for v1, 1 for v2): the far endpoint's pair on '+' edges, the far endpoint's
// F-divisor on '-' edges.
DivisorMult third_divisor(const CurveGraph& g, const CurveEdge& e, int end);

// Induced star of a vertex: the vertex, its incident edges, its neighbours.
CurveGraph star(const CurveGraph& g, const std::string& vertex_id);

// One lower-bound constraint on the even parameter k.
struct KConstraint {
    enum class Kind {
        EvenPositive,        // k is a positive even integer
        PairBound,           // k*n > m
        FiberDivisibility,   // 2m | k*n
        SlopeBound,          // k > bound
    };
    Kind kind = Kind::EvenPositive;
    Int m, n;
    Rat bound;
    std::vector<std::string> witnesses;
    bool holds(const Int& k) const;
};

struct KReport {
    Int k;
    std::vector<KConstraint> constraints;
};

// Smallest positive even k satisfying every constraint the decorations
// impose. Nothing downstream consumes k; it is reporting output only.
KReport min_k(const CurveGraph& g);

}
