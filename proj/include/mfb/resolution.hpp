#pragma once

#include <string>
#include <vector>

#include "mfb/covering.hpp"
#include "mfb/numtheory.hpp"

namespace mfb {

// Exceptional chain replacing one double point. coeffs/mults run from the
// v2 end towards the v1 end of the originating edge: the curve carrying
// -coeffs[0] and mults[0] attaches next to v2. mu_v2 / mu_v1 are the
// multiplicities the chain forces on the adjacent strict transforms.
struct StringChain {
    EdgeSign sign = EdgeSign::Plus;
    std::vector<Int> coeffs;   // k_1 .. k_l
    std::vector<Int> mults;    // mu_1 .. mu_l
    Int mu_v2;                 // mu_0
    Int mu_v1;                 // mu_{l+1}
};

// Chain for one edge of the base configuration. '+' edges resolve the
// quotient point (m2/d; m1/d, m3/d | 0; n1, n3) built from the shared
// F-divisor m2 and the endpoint pairs; '-' edges resolve
// (m1/d; m2/d, m3/d | n1; 0, 0) built from the shared pair and the two
// F-divisors. Throws decoration_error when the shared divisor of a '-' edge
// has m == 0.
StringChain edge_string(const CurveGraph& g, const CurveEdge& e);

// Multiplicity of the strict transform of a curve: mf * pair.n / gcd(mf, pair.m).
Int strict_transform_multiplicity(const Int& mf, const DivisorMult& pair);
Int strict_transform_multiplicity(const CurveVertex& v);

enum class MultKind { Strict, Chain, Arrow };

struct MultVertex {
    std::string id;
    MultKind kind = MultKind::Strict;
    Int mult;
    Int genus = 0;   // strict transforms: 1 - euler/2; chains and arrows: 0
};

struct MultEdge {
    std::string v1, v2;   // stored with v1 <= v2
    EdgeSign sign = EdgeSign::Plus;
};

struct MultGraph {
    std::string name;
    std::vector<MultVertex> vertices;   // sorted by id
    std::vector<MultEdge> edges;        // sorted by (v1, v2, sign)

    const MultVertex& vertex(const std::string& id) const;   // throws input_error
    void sort_records();
};

// Replaces every covered double point by its exceptional chain and decorates
// all vertices with multiplicities (strict transforms get genus 1 - euler/2,
// chain curves genus 0). Throws decoration_error when a chain end disagrees
// with the strict-transform multiplicity next to it.
MultGraph insert_strings(const CoveredGraph& cg);

}
