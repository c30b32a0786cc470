#ifndef HALFGRIDS_POLYNOMIAL_HPP
#define HALFGRIDS_POLYNOMIAL_HPP

#include <vector>

#include "halfgrids/rat.hpp"

namespace halfgrids {

// Dense univariate polynomial over Rat, little-endian coefficients.
// The zero polynomial is the empty vector.
using Poly = std::vector<Rat>;

namespace polyq {

void trim(Poly &p);
int degree(const Poly &p); // -1 for the zero polynomial
bool is_zero(const Poly &p);
Poly add(const Poly &a, const Poly &b);
Poly sub(const Poly &a, const Poly &b);
Poly mul(const Poly &a, const Poly &b);
Poly scale(const Poly &a, const Rat &s);
// Euclidean division, b != 0. Returns {quotient, remainder}.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Rat eval(const Poly &p, const Rat &x);
// x^n
Poly monomial(int n, const Rat &c = Rat(1));

// Extended Euclid: g = gcd(a, b) monic, with s*a + t*b = g.
struct ExtGcd {
    Poly g, s, t;
};
ExtGcd ext_gcd(const Poly &a, const Poly &b);

} // namespace polyq
} // namespace halfgrids

#endif
