#include "mfb/numtheory.hpp"

#include <stdexcept>

#include "mfb/errors.hpp"

namespace mfb {

namespace {

Int ceil_div(const Int& p, const Int& q) { return (p + q - 1) / q; }

// Inverse of x mod m for gcd(x, m) == 1, m >= 1; extended Euclid.
Int mod_inverse(const Int& x, const Int& m) {
    Int r0 = m, r1 = mod_norm(x, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (r0 != 1) throw std::logic_error("mod_inverse: arguments are not coprime");
    return mod_norm(t0, m);
}

}

NegContFrac neg_cont_frac(const Int& p, const Int& q) {
    if (p < 1 || q < 0 || q >= p)
        throw std::invalid_argument("neg_cont_frac: need 0 <= q < p");
    if (q == 0) {
        if (p != 1)
            throw std::invalid_argument("neg_cont_frac: empty expansion requires p == 1");
        return NegContFrac{p, q, {}};
    }
    if (gcd(p, q) != 1)
        throw std::invalid_argument("neg_cont_frac: p/q must be in lowest terms");

    NegContFrac r{p, q, {}};
    Int a = p, b = q;
    while (b != 0) {
        Int k = ceil_div(a, b);
        r.coeffs.push_back(k);
        Int next = k * b - a;   // in [0, b)
        a = b;
        b = next;
    }
    return r;
}

Fraction eval_ncf(const std::vector<Int>& coeffs) {
    Int p = 1, q = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (*it < 2)
            throw std::invalid_argument("eval_ncf: coefficients must be >= 2");
        Int np = *it * p - q;
        q = p;
        p = np;
    }
    return Fraction{p, q};
}

HJString hj_string(const Int& a, const Int& b, const Int& c,
                   const Int& n1, const Int& n2, const Int& n3) {
    if (a < 1 || b < 0 || c < 0 || n1 < 0 || n2 < 0 || n3 < 0)
        throw std::invalid_argument("hj_string: need a >= 1 and nonnegative b, c, n1, n2, n3");
    if (gcd(gcd(a, b), c) != 1)
        throw input_error("hj_string: non-coprime input, gcd(a,b,c) != 1");

    Int dab = gcd(a, b), dac = gcd(a, c);
    if (a % (dab * dac) != 0)
        throw decoration_error("hj_string: delta = a/((a,b)(a,c)) is not an integer");

    HJString s;
    s.a = a; s.b = b; s.c = c;
    s.n1 = n1; s.n2 = n2; s.n3 = n3;
    s.delta = a / (dab * dac);

    if (s.delta == 1) {
        s.alpha = 0;
    } else {
        // alpha*c*(a,b) + b*(a,c) == 0 (mod a) reduces to
        // alpha == -(b/(a,b)) * inverse(c/(a,c)) (mod delta), and c/(a,c) is
        // a unit mod delta whenever gcd(a,b,c) == 1.
        Int bp = b / dab, cp = c / dac;
        s.alpha = mod_norm(-bp * mod_inverse(cp, s.delta), s.delta);
    }
    if ((s.alpha * c * dab + b * dac) % a != 0)
        throw std::logic_error("hj_string: alpha does not satisfy its defining congruence");

    s.coeffs = neg_cont_frac(s.delta, s.alpha).coeffs;

    Int mu_end = (b * n1 + a * n2) / dab;   // mu_{l+1}
    Int mu0 = (c * n1 + a * n3) / dac;      // mu_0
    s.mus.push_back(mu0);
    if (s.delta == 1) {
        s.mus.push_back(mu_end);
        return s;
    }

    Int num = s.alpha * mu0 + mu_end;
    if (num % s.delta != 0)
        throw std::logic_error("hj_string: mu_1 is not an integer");
    Int mu_prev = mu0;
    Int mu_cur = num / s.delta;
    s.mus.push_back(mu_cur);
    for (std::size_t i = 0; i + 1 < s.coeffs.size(); ++i) {
        Int next = s.coeffs[i] * mu_cur - mu_prev;
        mu_prev = mu_cur;
        mu_cur = next;
        s.mus.push_back(mu_cur);
    }
    // the recursion must land exactly on the closed form for the far end
    if (s.coeffs.back() * mu_cur - mu_prev != mu_end)
        throw std::logic_error("hj_string: multiplicity recursion does not close");
    s.mus.push_back(mu_end);
    return s;
}

}
