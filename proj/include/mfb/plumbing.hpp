#pragma once

#include <string>
#include <vector>

#include "mfb/ints.hpp"
#include "mfb/resolution.hpp"

namespace mfb {

struct PlumbVertex {
    std::string id;
    Int euler;
    Int genus;
};

struct PlumbEdge {
    std::string v1, v2;   // stored with v1 <= v2
    EdgeSign sign = EdgeSign::Plus;
};

struct PlumbGraph {
    std::string name;
    std::vector<PlumbVertex> vertices;   // sorted by id
    std::vector<PlumbEdge> edges;        // sorted by (v1, v2, sign)

    const PlumbVertex& vertex(const std::string& id) const;   // throws input_error
    void sort_records();
};

// Decorates every compact curve with its self-intersection
//   e_v = -(sum over incident edges of sign * mult(far end)) / mult(v)
// and drops the arrowheads. Throws decoration_error when the division is not
// exact.
PlumbGraph compute_self_intersections(const MultGraph& mg);

struct IntersectionMatrix {
    std::vector<std::string> order;            // vertex ids, sorted
    std::vector<std::vector<Int>> entries;     // diag e_v, off-diag +-1 per edge
};

IntersectionMatrix intersection_matrix(const PlumbGraph& pg);

struct HomologyInvariants {
    Int det;                     // determinant of the intersection matrix
    std::vector<Int> factors;    // Smith normal form diagonal, d_i | d_{i+1}
    Int corank;                  // zero entries among factors
    Int genus_sum_doubled;       // 2 * sum of vertex genera
    Int cycle_count;             // independent cycles of the graph
};

// Exact integer invariants of the intersection form, plus the contributions
// to the first Betti number reported separately (corank, genera, cycles).
HomologyInvariants homology_invariants(const PlumbGraph& pg);

// Flips the sign of every edge incident to the given vertex.
PlumbGraph r0_flip(const PlumbGraph& pg, const std::string& vertex_id);

// Applies flips to drive the '-' edge count down: a spanning-forest pass
// (trees come out all '+'), then greedy single-vertex flips to a local
// minimum. On a cycle the '-' parity is flip-invariant, so an odd cycle
// keeps exactly one '-' edge.
PlumbGraph canonicalize_signs(const PlumbGraph& pg);

}
