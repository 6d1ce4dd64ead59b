#pragma once

// Independent reference computations used as oracles by the test suites.
// None of these call the library routine they are compared against.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/lattice.hpp"
#include "cyclolat/linalg.hpp"

namespace oracle {

using cyclolat::Integer;
using cyclolat::IntMatrix;
using cyclolat::RatMatrix;
using cyclolat::Rational;

inline Rational rat(long a, long b = 1) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

// Schoolbook product of coefficient vectors followed by reduction with
// zeta^p = 1 and then 1 + zeta + ... + zeta^(p-1) = 0.
inline std::vector<Rational> cyc_mul(int p, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> full(static_cast<std::size_t>(p), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) full[(i + j) % static_cast<std::size_t>(p)] += a[i] * b[j];
  std::vector<Rational> out(static_cast<std::size_t>(p - 1));
  for (std::size_t i = 0; i + 1 < full.size(); ++i) out[i] = full[i] - full.back();
  return out;
}

// Rational Gaussian elimination determinant.
inline Rational gauss_det(RatMatrix m) {
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      m.swap_rows(piv, c);
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

// N_{K/Q}(a) as the determinant of multiplication by a on the power basis.
inline Rational norm_by_matrix(const cyclolat::CycElem& a) {
  const int p = a.prime();
  const std::size_t n = static_cast<std::size_t>(p - 1);
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Rational> e(n, Rational(0));
    e[j] = 1;
    const auto col = cyc_mul(p, a.coeffs(), e);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return gauss_det(m);
}

// Value of a mu-basis element at mu = 2cos(2 pi k / p) in long double.
inline long double real_value(const cyclolat::RealElem& a, int k) {
  const long double pi = 3.14159265358979323846264338327950288L;
  const long double mu = 2.0L * std::cos(2.0L * pi * k / a.prime());
  long double v = 0;
  for (std::size_t i = a.coeffs().size(); i-- > 0;) v = v * mu + a.coeffs()[i].get_d();
  return v;
}

// Characteristic polynomial det(xI - A) by Lagrange interpolation through
// n + 1 integer points; low degree first.
inline std::vector<Rational> charpoly_interp(const IntMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<Rational> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (i == j ? Rational(static_cast<long>(t)) : Rational(0)) - Rational(a(i, j));
    xs.push_back(Rational(static_cast<long>(t)));
    ys.push_back(gauss_det(m));
  }
  std::vector<Rational> poly(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] -= basis[k] * xs[j];
        next[k + 1] += basis[k];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < basis.size(); ++k) poly[k] += ys[i] * basis[k] / denom;
  }
  return poly;
}

inline int descartes(const std::vector<Rational>& poly) {
  int changes = 0, last = 0;
  for (const auto& c : poly) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Signature of a symmetric matrix from Descartes' rule on its characteristic
// polynomial (exact for real-rooted polynomials).
inline cyclolat::Signature descartes_signature(const IntMatrix& g) {
  auto poly = charpoly_interp(g);
  const int pos = descartes(poly);
  for (std::size_t k = 1; k < poly.size(); k += 2) poly[k] = -poly[k];
  return {pos, descartes(poly)};
}

inline Rational mod2(const Rational& q) {
  Rational r = q / 2;
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q - 2 * Rational(f);
}

inline Rational mod1(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(f);
}

// Sorted q-values over L^v / L, enumerated as G^-1 y for y in a box of side
// |det|, deduplicated modulo Z^n.
inline std::vector<Rational> brute_force_form(const IntMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix gi(n, n);
  {
    // Adjugate-free inverse via Gauss-Jordan.
    RatMatrix a(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = g(i, j);
      a(i, n + i) = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t piv = c;
      while (a(piv, c) == 0) ++piv;
      a.swap_rows(piv, c);
      const Rational inv = 1 / a(c, c);
      for (std::size_t k = 0; k < 2 * n; ++k) a(c, k) *= inv;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == c || a(r, c) == 0) continue;
        const Rational f = a(r, c);
        for (std::size_t k = 0; k < 2 * n; ++k) a(r, k) -= f * a(c, k);
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) gi(i, j) = a(i, n + j);
  }
  Rational dr = gauss_det(cyclolat::to_rational(g));
  const long d = std::labs(dr.get_num().get_si());
  std::set<std::vector<Rational>> seen;
  std::vector<Rational> values;
  std::vector<long> y(n, 0);
  while (true) {
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i] += gi(i, j) * y[j];
    for (auto& c : x) c = mod1(c);
    if (seen.insert(x).second) {
      Rational q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += x[i] * Rational(g(i, j)) * x[j];
      values.push_back(mod2(q));
    }
    std::size_t k = 0;
    while (k < n && ++y[k] == d) y[k++] = 0;
    if (k == n) break;
  }
  std::sort(values.begin(), values.end());
  return values;
}

inline std::vector<Rational> negated(std::vector<Rational> v) {
  for (auto& q : v) q = mod2(-q);
  std::sort(v.begin(), v.end());
  return v;
}

inline Rational random_rational(std::mt19937& rng, int num_range, int den_max) {
  std::uniform_int_distribution<int> num(-num_range, num_range), den(1, den_max);
  return rat(num(rng), den(rng));
}

inline cyclolat::RealElem random_real(std::mt19937& rng, int p, int num_range, int den_max) {
  std::vector<Rational> c(static_cast<std::size_t>((p - 1) / 2));
  do {
    for (auto& x : c) x = random_rational(rng, num_range, den_max);
  } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }));
  return cyclolat::RealElem(p, c);
}

inline cyclolat::CycElem random_cyc(std::mt19937& rng, int p, int num_range, int den_max) {
  std::vector<Rational> c(static_cast<std::size_t>(p - 1));
  do {
    for (auto& x : c) x = random_rational(rng, num_range, den_max);
  } while (std::all_of(c.begin(), c.end(), [](const Rational& x) { return x == 0; }));
  return cyclolat::CycElem(p, c);
}

inline IntMatrix random_symmetric(std::mt19937& rng, std::size_t n, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = d(rng);
  return m;
}

}  // namespace oracle
