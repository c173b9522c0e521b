#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace mfb {

// All multiplicities, Euler numbers and matrix entries are exact integers.
// Divisibility tests carry semantic weight here, so no floating point and no
// fixed-width arithmetic anywhere in the pipeline.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// gcd with the usual gcd(x, 0) = x convention. Decorations of value 0
// (arrowhead pairs, boundary divisors) drop out of gcd computations this way.
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

// Least nonnegative representative of x mod m, m >= 1.
inline Int mod_norm(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

}
