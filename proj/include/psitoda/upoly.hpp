#ifndef PSITODA_UPOLY_HPP
#define PSITODA_UPOLY_HPP

#include <utility>
#include <vector>

#include "psitoda/quadext.hpp"
#include "psitoda/rational.hpp"

namespace psitoda {

/// Dense univariate polynomial over Rational, coefficients low to high.
/// Normalized: empty vector is the zero polynomial, back() is nonzero.
using UPoly = std::vector<Rational>;

UPoly up_normalize(UPoly p);
UPoly up_from(std::initializer_list<long> coeffs);
int up_degree(const UPoly &p); // -1 for zero
bool up_is_zero(const UPoly &p);
UPoly up_add(const UPoly &a, const UPoly &b);
UPoly up_sub(const UPoly &a, const UPoly &b);
UPoly up_neg(const UPoly &a);
UPoly up_mul(const UPoly &a, const UPoly &b);
UPoly up_scale(const UPoly &a, const Rational &c);
/// Quotient and remainder over the rational field; b nonzero.
std::pair<UPoly, UPoly> up_divmod(const UPoly &a, const UPoly &b);
UPoly up_mod(const UPoly &a, const UPoly &b);
UPoly up_monic(const UPoly &a);
UPoly up_gcd(UPoly a, UPoly b); // monic gcd
/// g = gcd(a, b) monic together with s, t such that s*a + t*b = g.
void up_xgcd(const UPoly &a, const UPoly &b, UPoly &g, UPoly &s, UPoly &t);
Rational up_eval(const UPoly &p, const Rational &x);
QuadExt up_eval(const UPoly &p, const QuadExt &x);
UPoly up_derivative(const UPoly &p);
/// p(x0 + t) as a polynomial in t (exact Taylor shift).
UPoly up_shift(const UPoly &p, const Rational &x0);
bool up_square_free(const UPoly &p);

} // namespace psitoda

#endif
