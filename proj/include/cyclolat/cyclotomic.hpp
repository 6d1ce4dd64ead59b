#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclolat/numeric.hpp"
#include "cyclolat/poly.hpp"

namespace cyclolat {

/// Element of K = Q(zeta_p) in the power basis (1, zeta, ..., zeta^(p-2)).
/// Arithmetic reduces modulo Phi_p(zeta) = 1 + zeta + ... + zeta^(p-1).
class CycElem {
 public:
  CycElem() = default;
  /// Zero of Q(zeta_p).
  explicit CycElem(int p);
  /// Exactly p-1 coefficients are required.
  CycElem(int p, std::vector<Rational> coeffs);

  /// Any polynomial in zeta, reduced modulo Phi_p.
  static CycElem from_poly(int p, const RatPoly& f);
  static CycElem one(int p);
  /// zeta^k for any integer k.
  static CycElem zeta_power(int p, long k);
  static CycElem constant(int p, const Rational& c);

  int prime() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;

  CycElem operator-() const;
  CycElem& operator+=(const CycElem& b);
  CycElem& operator-=(const CycElem& b);
  CycElem& operator*=(const CycElem& b);
  CycElem& operator*=(const Rational& c);

  friend CycElem operator+(CycElem a, const CycElem& b) { return a += b; }
  friend CycElem operator-(CycElem a, const CycElem& b) { return a -= b; }
  friend CycElem operator*(CycElem a, const CycElem& b) { return a *= b; }
  friend CycElem operator*(CycElem a, const Rational& c) { return a *= c; }
  friend CycElem operator*(const Rational& c, CycElem a) { return a *= c; }
  friend bool operator==(const CycElem& a, const CycElem& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

  /// Multiplication by zeta^k (a cyclic shift plus one reduction).
  CycElem shifted(long k) const;

  /// Coefficients on (1, zeta, ..., zeta^(p-1)) with the last entry zero.
  std::vector<Rational> extended_coeffs() const;

 private:
  void check_same_field(const CycElem& b) const;

  int p_ = 0;
  std::vector<Rational> coeffs_;
};

CycElem mul(const CycElem& a, const CycElem& b);
/// zeta^i -> zeta^(p-i).
CycElem conj(const CycElem& a);
Rational trace(const CycElem& a);
/// N_{K/Q}(a) = Res(Phi_p, a(x)); Phi_p is monic so no sign correction is
/// needed. norm_K(0) = 0.
Rational norm_K(const CycElem& a);
/// Throws Error for a = 0.
CycElem inverse(const CycElem& a);

/// Element of F = Q(mu_p), mu_p = zeta + zeta^-1, in the basis
/// (1, mu, ..., mu^((p-3)/2)).
class RealElem {
 public:
  RealElem() = default;
  explicit RealElem(int p);
  RealElem(int p, std::vector<Rational> coeffs);

  /// Any polynomial in mu, reduced modulo the minimal polynomial of mu_p.
  static RealElem from_poly(int p, const RatPoly& f);
  static RealElem one(int p);
  static RealElem mu(int p);
  static RealElem constant(int p, const Rational& c);

  int prime() const { return p_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  RealElem operator-() const;
  RealElem& operator+=(const RealElem& b);
  RealElem& operator-=(const RealElem& b);
  RealElem& operator*=(const RealElem& b);
  RealElem& operator*=(const Rational& c);

  friend RealElem operator+(RealElem a, const RealElem& b) { return a += b; }
  friend RealElem operator-(RealElem a, const RealElem& b) { return a -= b; }
  friend RealElem operator*(RealElem a, const RealElem& b) { return a *= b; }
  friend RealElem operator*(RealElem a, const Rational& c) { return a *= c; }
  friend RealElem operator*(const Rational& c, RealElem a) { return a *= c; }
  friend bool operator==(const RealElem& a, const RealElem& b) { return a.p_ == b.p_ && a.coeffs_ == b.coeffs_; }

  /// The same number as an element of K.
  CycElem embed() const;

 private:
  void check_same_field(const RealElem& b) const;

  int p_ = 0;
  std::vector<Rational> coeffs_;
};

RealElem inverse(const RealElem& a);
/// a^k for any integer k (negative powers need a != 0).
RealElem power(const RealElem& a, long k);
/// N_{F/Q}(a) = Res(m_mu, a(x)) with m_mu the monic minimal polynomial of mu_p.
Rational norm_F(const RealElem& a);
/// Rewrites a conjugation-fixed element of K in the mu basis; nullopt if a is
/// not real.
std::optional<RealElem> to_real(const CycElem& a);

/// Closed rational interval [lower, upper].
struct Interval {
  Rational lower;
  Rational upper;

  bool contains(const Rational& x) const { return lower <= x && x <= upper; }
  bool contains(const Interval& o) const { return lower <= o.lower && o.upper <= upper; }
  Rational width() const { return upper - lower; }
  /// +1 / -1 when the interval excludes zero, 0 otherwise.
  int sign() const;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);

/// Certified enclosure of the image of a real element under the embedding
/// mu_p -> 2cos(2 pi k / p).
struct EmbeddingValue {
  int index = 0;  // k, 1 <= k <= (p-1)/2
  Interval value;
};

/// Enclosure of 2cos(2 pi k / p) of width at most 2^-bits. The endpoints are
/// certified by a sign change of the minimal polynomial of mu_p; exact
/// rational roots (p = 3) collapse to a point interval.
Interval mu_embedding(int p, int k, int bits);

/// Enclosures for every real embedding, obtained by interval Horner evaluation
/// over certified mu enclosures of width 2^-precision. precision >= 8.
std::vector<EmbeddingValue> eval_embeddings(const RealElem& a, int precision);

/// Certified sign of a under every real embedding (k = 1 .. (p-1)/2). Zero
/// elements give all zeros; otherwise precision doubles until every interval
/// excludes zero.
std::vector<int> embedding_signs(const RealElem& a);

/// Number of real embeddings in which a is negative.
int negative_embeddings(const RealElem& a);

// Text serialization: comma-separated exact rationals in basis order. Parsing
// accepts fewer coefficients than the basis size (missing ones are zero) and
// reduces longer lists as polynomials.
std::string format_elem(const CycElem& a);
std::string format_elem(const RealElem& a);
CycElem parse_cyc_elem(int p, std::string_view text);
RealElem parse_real_elem(int p, std::string_view text);

}  // namespace cyclolat
