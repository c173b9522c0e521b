#pragma once

#include <vector>

#include "mfb/ints.hpp"

namespace mfb {

// Negative continued fraction
//   p/q = k_1 - 1/(k_2 - 1/(... - 1/k_l)),   all k_i >= 2.
// denominator == 0 encodes the empty expansion (then numerator == 1).
struct NegContFrac {
    Int numerator;
    Int denominator;
    std::vector<Int> coeffs;
};

// Expansion of p/q for 0 <= q < p, coprime when q > 0. The expansion has at
// most q coefficients.
NegContFrac neg_cont_frac(const Int& p, const Int& q);

// A not-necessarily-finite fraction: den == 0 encodes 1/0.
struct Fraction {
    Int num;
    Int den;
};

// Evaluates [k_1, ..., k_l] back to a reduced fraction; [] gives 1/0.
Fraction eval_ncf(const std::vector<Int>& coeffs);

// Resolution data of the cyclic-quotient point of type (a; b, c) together
// with the multiplicities induced by ambient multiplicities (n1, n2, n3):
//
//   delta  = a / ((a,b)(a,c))
//   alpha  = the unique solution in [0, delta) of  a | alpha*c*(a,b) + b*(a,c)
//   coeffs = negative continued fraction of delta/alpha
//   mus    = mu_0, mu_1, ..., mu_l, mu_{l+1} with
//              mu_{l+1} = (b*n1 + a*n2)/(a,b)      (the C-side end)
//              mu_0     = (c*n1 + a*n3)/(a,c)      (the C'-side end)
//              mu_1     = (alpha*mu_0 + mu_{l+1})/delta
//              mu_{i+1} = k_i*mu_i - mu_{i-1}
//
// The i-th exceptional curve carries self-intersection -k_i and multiplicity
// mu_i; mu_0 and mu_{l+1} sit on the two resolved branches.
struct HJString {
    Int a, b, c;
    Int n1, n2, n3;
    Int delta;
    Int alpha;
    std::vector<Int> coeffs;
    std::vector<Int> mus;
};

HJString hj_string(const Int& a, const Int& b, const Int& c,
                   const Int& n1, const Int& n2, const Int& n3);

}
