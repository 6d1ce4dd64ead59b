#include "cyclolat/linalg.hpp"

#include <numeric>

namespace cyclolat {

namespace {

// Row operations that keep a transform matrix in sync.
void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += q * m(src, j);
}

void add_col_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += q * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

Integer tdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Integer det(const IntMatrix& a) {
  if (!a.square()) throw Error("det: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

Rational det(const RatMatrix& a) {
  if (!a.square()) throw Error("det: matrix is not square");
  RatMatrix m = a;
  const std::size_t n = m.rows();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return d;
}

int rank(const RatMatrix& a) {
  RatMatrix m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(piv, r);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c) == 0) continue;
      Rational f = m(i, c) / m(r, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    ++r;
  }
  return static_cast<int>(r);
}

HermiteResult hermite_form(const IntMatrix& a) {
  IntMatrix h = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  const std::size_t m = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
    while (true) {
      // Smallest nonzero |entry| in column c at or below row r; first wins ties.
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (h(i, c) != 0 && (piv == m || abs(h(i, c)) < abs(h(piv, c)))) piv = i;
      if (piv == m) break;
      h.swap_rows(piv, r);
      u.swap_rows(piv, r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        Integer q = -tdiv(h(i, c), h(r, c));
        add_row_multiple(h, i, r, q);
        add_row_multiple(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= m || h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = -fdiv(h(i, c), h(r, c));
      add_row_multiple(h, i, r, q);
      add_row_multiple(u, i, r, q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), static_cast<int>(r)};
}

std::vector<Integer> SNFResult::diagonal() const {
  std::vector<Integer> d;
  for (std::size_t i = 0; i < std::min(D.rows(), D.cols()); ++i) d.push_back(D(i, i));
  return d;
}

SNFResult snf(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t m = d.rows(), n = d.cols();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    while (true) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (d(i, j) != 0 && (pi == m || abs(d(i, j)) < abs(d(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;  // remaining block is zero
      d.swap_rows(pi, t);
      u.swap_rows(pi, t);
      d.swap_cols(pj, t);
      v.swap_cols(pj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = -tdiv(d(i, t), d(t, t));
        add_row_multiple(d, i, t, q);
        add_row_multiple(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = -tdiv(d(t, j), d(t, t));
        add_col_multiple(d, j, t, q);
        add_col_multiple(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold the first offending row into row t and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            add_row_multiple(d, t, i, Integer(1));
            add_row_multiple(u, t, i, Integer(1));
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

IntMatrix int_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteResult hr = hermite_form(a.transpose());
  const std::size_t k = n - static_cast<std::size_t>(hr.rank);
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix basis = hr.U.block(static_cast<std::size_t>(hr.rank), 0, k, n);
  return hermite_form(basis).H.transpose();
}

RatMatrix rational_inverse(const RatMatrix& a) {
  if (!a.square()) throw Error("rational_inverse: matrix is not square");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("rational_inverse: matrix is singular");
    m.swap_rows(piv, k);
    inv.swap_rows(piv, k);
    const Rational s = 1 / m(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      m(k, j) *= s;
      inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix rational_inverse(const IntMatrix& a) { return rational_inverse(to_rational(a)); }

std::optional<std::vector<Rational>> rational_solve(const RatMatrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw Error("rational_solve: dimension mismatch");
  const std::size_t m = a.rows(), n = a.cols();
  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t piv = r;
    while (piv < m && aug(piv, c) == 0) ++piv;
    if (piv == m) continue;
    aug.swap_rows(piv, r);
    const Rational s = 1 / aug(r, c);
    for (std::size_t j = c; j <= n; ++j) aug(r, j) *= s;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || aug(i, c) == 0) continue;
      const Rational f = aug(i, c);
      for (std::size_t j = c; j <= n; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (aug(i, n) != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = aug(i, n);
  return x;
}

Signature congruent_diag(const RatMatrix& g) {
  if (!g.symmetric()) throw Error("congruent_diag: matrix is not symmetric");
  RatMatrix a = g;
  const std::size_t n = a.rows();
  auto sym_swap = [&a](std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    a.swap_cols(i, j);
  };
  Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, piv) == 0) ++piv;
    if (piv < n) {
      sym_swap(piv, k);
    } else {
      // All remaining diagonal entries vanish: pick the first nonzero
      // off-diagonal entry (i, j) and add row/column j to row/column k.
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (a(i, j) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) throw SingularMatrixError("congruent_diag: degenerate form");
      sym_swap(pi, k);
      if (pj == k) pj = pi;
      for (std::size_t j = 0; j < n; ++j) a(k, j) += a(pj, j);
      for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, pj);
    }
    const Rational d = a(k, k);
    (sgn(d) > 0 ? sig.positive : sig.negative) += 1;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) a(i, k) = a(k, i) = 0;
  }
  return sig;
}

Signature congruent_diag(const IntMatrix& g) { return congruent_diag(to_rational(g)); }

std::vector<Integer> char_poly(const IntMatrix& a) {
  if (!a.square()) throw Error("char_poly: matrix is not square");
  const std::size_t n = a.rows();
  std::vector<Integer> c(n + 1, Integer(0));
  c[n] = 1;
  IntMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    IntMatrix am = a * m;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    Integer q;
    Integer kk(static_cast<unsigned long>(k));
    mpz_divexact(q.get_mpz_t(), tr.get_mpz_t(), kk.get_mpz_t());
    c[n - k] = -q;
  }
  return c;
}

IntMatrix matrix_power(const IntMatrix& a, unsigned long e) {
  if (!a.square()) throw Error("matrix_power: matrix is not square");
  IntMatrix result = IntMatrix::identity(a.rows());
  IntMatrix base = a;
  while (e) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

IntMatrix companion_matrix(const std::vector<Integer>& monic) {
  if (monic.size() < 2 || monic.back() != 1) throw Error("companion_matrix: polynomial must be monic of degree >= 1");
  const std::size_t n = monic.size() - 1;
  IntMatrix c(n, n);
  for (std::size_t i = 1; i < n; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) c(i, n - 1) = -monic[i];
  return c;
}

Integer common_denominator(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

Integer common_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
  return l;
}

}  // namespace cyclolat
