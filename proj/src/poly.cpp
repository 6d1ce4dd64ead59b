#include "cyclolat/poly.hpp"

#include <algorithm>
#include <string>

namespace cyclolat {

void trim(RatPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const RatPoly& f) {
  for (std::size_t i = f.size(); i-- > 0;)
    if (f[i] != 0) return static_cast<int>(i);
  return -1;
}

const Rational& leading(const RatPoly& f) {
  int d = degree(f);
  if (d < 0) throw Error("leading coefficient of the zero polynomial");
  return f[static_cast<std::size_t>(d)];
}

RatPoly poly_add(const RatPoly& f, const RatPoly& g) {
  RatPoly h(std::max(f.size(), g.size()), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) h[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] += g[i];
  trim(h);
  return h;
}

RatPoly poly_sub(const RatPoly& f, const RatPoly& g) {
  RatPoly h(std::max(f.size(), g.size()), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) h[i] += f[i];
  for (std::size_t i = 0; i < g.size(); ++i) h[i] -= g[i];
  trim(h);
  return h;
}

RatPoly poly_mul(const RatPoly& f, const RatPoly& g) {
  if (f.empty() || g.empty()) return {};
  RatPoly h(f.size() + g.size() - 1, Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] += f[i] * g[j];
  }
  trim(h);
  return h;
}

RatPoly poly_scale(const RatPoly& f, const Rational& c) {
  RatPoly h(f);
  for (auto& x : h) x *= c;
  trim(h);
  return h;
}

void poly_divmod(const RatPoly& f, const RatPoly& g, RatPoly& q, RatPoly& r) {
  int dg = degree(g);
  if (dg < 0) throw Error("polynomial division by zero");
  r = f;
  trim(r);
  int dr = degree(r);
  q.assign(dr >= dg ? static_cast<std::size_t>(dr - dg + 1) : 0, Rational(0));
  const Rational lg = g[static_cast<std::size_t>(dg)];
  while (dr >= dg) {
    Rational c = r[static_cast<std::size_t>(dr)] / lg;
    std::size_t shift = static_cast<std::size_t>(dr - dg);
    q[shift] = c;
    for (int i = 0; i <= dg; ++i) r[shift + static_cast<std::size_t>(i)] -= c * g[static_cast<std::size_t>(i)];
    trim(r);
    dr = degree(r);
  }
  trim(q);
}

RatPoly poly_rem(const RatPoly& f, const RatPoly& g) {
  RatPoly q, r;
  poly_divmod(f, g, q, r);
  return r;
}

Rational poly_eval(const RatPoly& f, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

Rational resultant(const RatPoly& f0, const RatPoly& g0) {
  RatPoly f = f0, g = g0;
  trim(f);
  trim(g);
  if (f.empty() || g.empty()) return Rational(0);
  Rational acc(1);
  while (true) {
    int df = degree(f), dg = degree(g);
    if (dg == 0) {
      // Res(f, c) = c^deg f
      Rational c = g[0];
      Rational pw(1);
      for (int i = 0; i < df; ++i) pw *= c;
      return acc * pw;
    }
    if (df == 0) {
      Rational c = f[0];
      Rational pw(1);
      for (int i = 0; i < dg; ++i) pw *= c;
      return acc * pw;
    }
    RatPoly r = poly_rem(f, g);
    if (r.empty()) return Rational(0);
    int dr = degree(r);
    // Res(f, g) = (-1)^(df*dg) * lc(g)^(df - dr) * Res(g, r)
    if ((df * dg) % 2 == 1) acc = -acc;
    Rational lg = leading(g);
    for (int i = 0; i < df - dr; ++i) acc *= lg;
    f = std::move(g);
    g = std::move(r);
  }
}

RatPoly poly_inverse_mod(const RatPoly& g0, const RatPoly& f0) {
  // Extended Euclid: track s with s*g == r (mod f).
  RatPoly r0 = f0, r1 = poly_rem(g0, f0);
  RatPoly s0, s1{Rational(1)};
  trim(r0);
  while (degree(r1) > 0) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw Error("polynomial is not invertible modulo the given modulus");
  return poly_rem(poly_scale(s1, Rational(1) / r1[0]), f0);
}

RatPoly cyclotomic_poly(int p) {
  if (!is_odd_prime(p)) throw Error("cyclotomic_poly: " + std::to_string(p) + " is not an odd prime");
  return RatPoly(static_cast<std::size_t>(p), Rational(1));
}

RatPoly minimal_poly_mu(int p) {
  if (!is_odd_prime(p)) throw Error("minimal_poly_mu: " + std::to_string(p) + " is not an odd prime");
  const int m = (p - 1) / 2;
  const RatPoly mu{Rational(0), Rational(1)};
  RatPoly prev{Rational(2)};  // D_0
  RatPoly cur = mu;           // D_1
  RatPoly acc{Rational(1)};
  for (int i = 1; i <= m; ++i) {
    acc = poly_add(acc, cur);
    RatPoly next = poly_sub(poly_mul(mu, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return acc;
}

int sign_variations(const RatPoly& f) {
  int count = 0, last = 0;
  for (const auto& c : f) {
    int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

RatPoly poly_reflect(const RatPoly& f) {
  RatPoly g(f);
  for (std::size_t i = 1; i < g.size(); i += 2) g[i] = -g[i];
  return g;
}

bool is_odd_prime(long n) {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

}  // namespace cyclolat
