#include "cyclolat/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

namespace cyclolat {

namespace {

void require_prime(int p) {
  if (!is_odd_prime(p)) throw Error(std::to_string(p) + " is not an odd prime");
}

std::size_t wrap(long k, int p) {
  long r = k % p;
  if (r < 0) r += p;
  return static_cast<std::size_t>(r);
}

// Coefficients on zeta^0..zeta^(p-1) -> power basis, using
// zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
std::vector<Rational> reduce_extended(std::vector<Rational> ext) {
  const Rational top = ext.back();
  ext.pop_back();
  if (top != 0)
    for (auto& c : ext) c -= top;
  return ext;
}

const RatPoly& cached_minpoly(int p) {
  static std::mutex mutex;
  static std::map<int, RatPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, minimal_poly_mu(p)).first;
  return it->second;
}

// Remainder modulo a monic polynomial, in place.
void reduce_monic(RatPoly& f, const RatPoly& monic) {
  trim(f);
  const int d = degree(monic);
  for (int i = degree(f); i >= d; --i) {
    const Rational c = f[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(i - d);
    for (int j = 0; j <= d; ++j) f[shift + static_cast<std::size_t>(j)] -= c * monic[static_cast<std::size_t>(j)];
  }
  f.resize(std::min(f.size(), static_cast<std::size_t>(d)));
  trim(f);
}

std::vector<Rational> padded(RatPoly f, std::size_t n) {
  f.resize(n, Rational(0));
  return f;
}

}  // namespace

// ---------------------------------------------------------------- CycElem

CycElem::CycElem(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(static_cast<std::size_t>(p - 1), Rational(0));
}

CycElem::CycElem(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != static_cast<std::size_t>(p - 1))
    throw Error("CycElem for p=" + std::to_string(p) + " needs " + std::to_string(p - 1) + " coefficients, got " +
                std::to_string(coeffs_.size()));
}

CycElem CycElem::from_poly(int p, const RatPoly& f) {
  require_prime(p);
  std::vector<Rational> ext(static_cast<std::size_t>(p), Rational(0));
  for (std::size_t i = 0; i < f.size(); ++i) ext[i % static_cast<std::size_t>(p)] += f[i];
  return CycElem(p, reduce_extended(std::move(ext)));
}

CycElem CycElem::one(int p) { return constant(p, Rational(1)); }

CycElem CycElem::constant(int p, const Rational& c) {
  CycElem a(p);
  a.coeffs_[0] = c;
  return a;
}

CycElem CycElem::zeta_power(int p, long k) {
  require_prime(p);
  std::vector<Rational> ext(static_cast<std::size_t>(p), Rational(0));
  ext[wrap(k, p)] = 1;
  return CycElem(p, reduce_extended(std::move(ext)));
}

bool CycElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void CycElem::check_same_field(const CycElem& b) const {
  if (p_ != b.p_) throw Error("CycElem prime mismatch: " + std::to_string(p_) + " vs " + std::to_string(b.p_));
}

CycElem CycElem::operator-() const {
  CycElem r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycElem& CycElem::operator+=(const CycElem& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator-=(const CycElem& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycElem& CycElem::operator*=(const CycElem& b) {
  check_same_field(b);
  const std::size_t p = static_cast<std::size_t>(p_);
  std::vector<Rational> ext(p, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= p) k -= p;
      ext[k] += coeffs_[i] * b.coeffs_[j];
    }
  }
  coeffs_ = reduce_extended(std::move(ext));
  return *this;
}

CycElem& CycElem::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::vector<Rational> CycElem::extended_coeffs() const {
  std::vector<Rational> ext(coeffs_);
  ext.emplace_back(0);
  return ext;
}

CycElem CycElem::shifted(long k) const {
  const std::size_t p = static_cast<std::size_t>(p_);
  const std::size_t s = wrap(k, p_);
  std::vector<Rational> ext(p, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) ext[(i + s) % p] = coeffs_[i];
  return CycElem(p_, reduce_extended(std::move(ext)));
}

CycElem mul(const CycElem& a, const CycElem& b) { return a * b; }

CycElem conj(const CycElem& a) {
  const int p = a.prime();
  std::vector<Rational> ext(static_cast<std::size_t>(p), Rational(0));
  const auto& c = a.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) ext[wrap(-static_cast<long>(i), p)] = c[i];
  return CycElem(p, reduce_extended(std::move(ext)));
}

Rational trace(const CycElem& a) {
  const auto& c = a.coeffs();
  Rational t = c[0] * (a.prime() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) t -= c[i];
  return t;
}

Rational norm_K(const CycElem& a) { return resultant(cyclotomic_poly(a.prime()), a.coeffs()); }

CycElem inverse(const CycElem& a) {
  if (a.is_zero()) throw Error("inverse of zero in Q(zeta_p)");
  return CycElem::from_poly(a.prime(), poly_inverse_mod(a.coeffs(), cyclotomic_poly(a.prime())));
}

// ---------------------------------------------------------------- RealElem

RealElem::RealElem(int p) : p_(p) {
  require_prime(p);
  coeffs_.assign(static_cast<std::size_t>((p - 1) / 2), Rational(0));
}

RealElem::RealElem(int p, std::vector<Rational> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (coeffs_.size() != static_cast<std::size_t>((p - 1) / 2))
    throw Error("RealElem for p=" + std::to_string(p) + " needs " + std::to_string((p - 1) / 2) +
                " coefficients, got " + std::to_string(coeffs_.size()));
}

RealElem RealElem::from_poly(int p, const RatPoly& f) {
  require_prime(p);
  RatPoly r(f);
  reduce_monic(r, cached_minpoly(p));
  return RealElem(p, padded(std::move(r), static_cast<std::size_t>((p - 1) / 2)));
}

RealElem RealElem::one(int p) { return constant(p, Rational(1)); }

RealElem RealElem::constant(int p, const Rational& c) {
  RealElem a(p);
  a.coeffs_[0] = c;
  return a;
}

RealElem RealElem::mu(int p) { return from_poly(p, RatPoly{Rational(0), Rational(1)}); }

bool RealElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

void RealElem::check_same_field(const RealElem& b) const {
  if (p_ != b.p_) throw Error("RealElem prime mismatch: " + std::to_string(p_) + " vs " + std::to_string(b.p_));
}

RealElem RealElem::operator-() const {
  RealElem r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

RealElem& RealElem::operator+=(const RealElem& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

RealElem& RealElem::operator-=(const RealElem& b) {
  check_same_field(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

RealElem& RealElem::operator*=(const RealElem& b) {
  check_same_field(b);
  RatPoly prod = poly_mul(coeffs_, b.coeffs_);
  reduce_monic(prod, cached_minpoly(p_));
  coeffs_ = padded(std::move(prod), coeffs_.size());
  return *this;
}

RealElem& RealElem::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

CycElem RealElem::embed() const {
  CycElem acc(p_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc.shifted(1) + acc.shifted(-1);
    acc += CycElem::constant(p_, coeffs_[i]);
  }
  return acc;
}

RealElem inverse(const RealElem& a) {
  if (a.is_zero()) throw Error("inverse of zero in Q(mu_p)");
  return RealElem::from_poly(a.prime(), poly_inverse_mod(a.coeffs(), cached_minpoly(a.prime())));
}

RealElem power(const RealElem& a, long k) {
  RealElem base = k < 0 ? inverse(a) : a;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  RealElem acc = RealElem::one(a.prime());
  while (e) {
    if (e & 1UL) acc *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return acc;
}

Rational norm_F(const RealElem& a) { return resultant(cached_minpoly(a.prime()), a.coeffs()); }

std::optional<RealElem> to_real(const CycElem& a) {
  const int p = a.prime();
  const std::vector<Rational> ext = a.extended_coeffs();
  // Real iff the extended representation is palindromic: e_i == e_{p-i}.
  for (int i = 1; i < p; ++i)
    if (ext[static_cast<std::size_t>(i)] != ext[static_cast<std::size_t>(p - i)]) return std::nullopt;
  const RatPoly mu{Rational(0), Rational(1)};
  RatPoly prev{Rational(2)}, cur = mu;
  RatPoly acc{ext[0]};
  for (int i = 1; i <= (p - 1) / 2; ++i) {
    acc = poly_add(acc, poly_scale(cur, ext[static_cast<std::size_t>(i)]));
    RatPoly next = poly_sub(poly_mul(mu, cur), prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RealElem::from_poly(p, acc);
}

// ---------------------------------------------------------------- intervals

int Interval::sign() const {
  if (sgn(lower) > 0) return 1;
  if (sgn(upper) < 0) return -1;
  return 0;
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lower + b.lower, a.upper + b.upper}; }

Interval operator*(const Interval& a, const Interval& b) {
  Rational c[4] = {a.lower * b.lower, a.lower * b.upper, a.upper * b.lower, a.upper * b.upper};
  return {*std::min_element(c, c + 4), *std::max_element(c, c + 4)};
}

namespace {

Rational dyadic(double x, int exponent) {
  // round(x * 2^exponent) / 2^exponent
  Integer num(static_cast<long>(std::llround(std::ldexp(x, exponent))));
  Integer den = 1;
  den <<= static_cast<unsigned long>(exponent);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational pow2(int e) {
  Integer one = 1;
  if (e >= 0) return Rational(Integer(one << static_cast<unsigned long>(e)));
  Integer den = one << static_cast<unsigned long>(-e);
  return Rational(Integer(1), den);
}

// Isolating intervals for 2cos(2 pi k / p), k = 1 .. (p-1)/2, certified by
// strict sign changes of the minimal polynomial on pairwise disjoint
// intervals: a degree-m polynomial with m such intervals has exactly one root
// in each.
std::vector<Interval> isolate_mu_roots(int p) {
  static std::mutex mutex;
  static std::map<int, std::vector<Interval>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(p); it != cache.end()) return it->second;
  }
  const RatPoly& m = cached_minpoly(p);
  const int count = (p - 1) / 2;
  std::vector<Interval> roots;
  for (int radius_exp = -36; radius_exp <= -4; radius_exp += 8) {
    roots.clear();
    bool ok = true;
    const Rational radius = pow2(radius_exp);
    for (int k = 1; k <= count && ok; ++k) {
      double approx = 2.0 * std::cos(2.0 * std::numbers::pi * k / p);
      Rational center = dyadic(approx, 52);
      if (poly_eval(m, center) == 0) {
        roots.push_back({center, center});
        continue;
      }
      Interval iv{center - radius, center + radius};
      int sl = sgn(poly_eval(m, iv.lower)), su = sgn(poly_eval(m, iv.upper));
      if (sl == 0 || su == 0 || sl == su) ok = false;
      roots.push_back(iv);
    }
    // k increasing means the root decreases; require strict separation.
    for (std::size_t i = 1; ok && i < roots.size(); ++i)
      if (!(roots[i].upper < roots[i - 1].lower)) ok = false;
    if (ok) {
      std::lock_guard lock(mutex);
      cache.emplace(p, roots);
      return roots;
    }
  }
  throw Error("could not isolate the real embeddings of mu_" + std::to_string(p));
}

}  // namespace

Interval mu_embedding(int p, int k, int bits) {
  require_prime(p);
  if (k < 1 || k > (p - 1) / 2) throw Error("embedding index out of range: " + std::to_string(k));
  const RatPoly& m = cached_minpoly(p);
  Interval iv = isolate_mu_roots(p)[static_cast<std::size_t>(k - 1)];
  const Rational target = pow2(-bits);
  int sl = sgn(poly_eval(m, iv.lower));
  while (iv.width() > target) {
    Rational mid = (iv.lower + iv.upper) / 2;
    int sm = sgn(poly_eval(m, mid));
    if (sm == 0) return {mid, mid};
    if (sm == sl) {
      iv.lower = mid;
    } else {
      iv.upper = mid;
    }
  }
  return iv;
}

std::vector<EmbeddingValue> eval_embeddings(const RealElem& a, int precision) {
  if (precision < 8) throw Error("eval_embeddings: precision must be at least 8 bits");
  const int p = a.prime();
  std::vector<EmbeddingValue> out;
  const auto& c = a.coeffs();
  for (int k = 1; k <= (p - 1) / 2; ++k) {
    Interval mu = mu_embedding(p, k, precision);
    Interval acc{c.back(), c.back()};
    for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * mu + Interval{c[i], c[i]};
    out.push_back({k, acc});
  }
  return out;
}

std::vector<int> embedding_signs(const RealElem& a) {
  const std::size_t n = static_cast<std::size_t>((a.prime() - 1) / 2);
  if (a.is_zero()) return std::vector<int>(n, 0);
  for (int precision = 32; precision <= (1 << 16); precision *= 2) {
    auto values = eval_embeddings(a, precision);
    std::vector<int> signs;
    for (const auto& v : values) signs.push_back(v.value.sign());
    if (std::none_of(signs.begin(), signs.end(), [](int s) { return s == 0; })) return signs;
  }
  throw Error("embedding sign refinement did not terminate");
}

int negative_embeddings(const RealElem& a) {
  auto s = embedding_signs(a);
  return static_cast<int>(std::count(s.begin(), s.end(), -1));
}

// ---------------------------------------------------------------- text

std::string format_elem(const CycElem& a) { return format_rational_list(a.coeffs()); }
std::string format_elem(const RealElem& a) { return format_rational_list(a.coeffs()); }

CycElem parse_cyc_elem(int p, std::string_view text) {
  return CycElem::from_poly(p, parse_rational_list(text));
}

RealElem parse_real_elem(int p, std::string_view text) {
  return RealElem::from_poly(p, parse_rational_list(text));
}

}  // namespace cyclolat
