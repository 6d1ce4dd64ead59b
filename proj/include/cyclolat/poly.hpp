#pragma once

#include <vector>

#include "cyclolat/numeric.hpp"

namespace cyclolat {

/// Dense univariate polynomial over Q, coefficient of x^i at index i. The
/// zero polynomial is the empty vector; all functions return trimmed results.
using RatPoly = std::vector<Rational>;

void trim(RatPoly& f);
int degree(const RatPoly& f);  // -1 for the zero polynomial
const Rational& leading(const RatPoly& f);

RatPoly poly_add(const RatPoly& f, const RatPoly& g);
RatPoly poly_sub(const RatPoly& f, const RatPoly& g);
RatPoly poly_mul(const RatPoly& f, const RatPoly& g);
RatPoly poly_scale(const RatPoly& f, const Rational& c);

/// Euclidean division f = q*g + r with deg r < deg g. Throws on g = 0.
void poly_divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r);
RatPoly poly_rem(const RatPoly& f, const RatPoly& g);

Rational poly_eval(const RatPoly& f, const Rational& x);

/// Resultant Res(f, g) = lc(f)^deg(g) * prod_{f(r)=0} g(r), computed by the
/// Euclidean remainder sequence over Q. Res(f, 0) = 0.
Rational resultant(const RatPoly& f, const RatPoly& g);

/// Inverse of g modulo f (f irreducible, g not divisible by f). Throws if g
/// and f are not coprime.
RatPoly poly_inverse_mod(const RatPoly& g, const RatPoly& f);

/// Phi_p(x) = 1 + x + ... + x^(p-1) for a prime p.
RatPoly cyclotomic_poly(int p);

/// Monic degree-(p-1)/2 integer polynomial annihilating mu_p = zeta + zeta^-1.
/// Obtained from Phi_p(z)/z^((p-1)/2) = 1 + sum_i (z^i + z^-i) with
/// z^i + z^-i = D_i(mu), D_0 = 2, D_1 = mu, D_{i+1} = mu*D_i - D_{i-1}.
RatPoly minimal_poly_mu(int p);

/// Number of sign changes in the coefficient sequence (zeros skipped).
int sign_variations(const RatPoly& f);

/// f(-x).
RatPoly poly_reflect(const RatPoly& f);

bool is_odd_prime(long n);

}  // namespace cyclolat
