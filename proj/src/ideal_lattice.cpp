#include "cyclolat/ideal_lattice.hpp"

namespace cyclolat {

IdealLatticeSpec IdealLatticeSpec::unit_ideal(RealElem alpha) {
  IdealLatticeSpec s;
  s.p = alpha.prime();
  s.beta = CycElem::one(s.p);
  s.alpha = std::move(alpha);
  return s;
}

void IdealLatticeSpec::validate() const {
  if (!is_odd_prime(p)) throw Error("ideal lattice: " + std::to_string(p) + " is not an odd prime");
  if (beta.prime() != p || alpha.prime() != p) throw Error("ideal lattice: beta and alpha must live over p=" + std::to_string(p));
  if (beta.is_zero()) throw Error("ideal lattice: beta must be nonzero");
  if (alpha.is_zero()) throw Error("ideal lattice: alpha must be nonzero");
}

RatMatrix ideal_gram(const IdealLatticeSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const std::size_t n = static_cast<std::size_t>(p - 1);
  // gamma = alpha beta conj(beta); G[i][j] = Tr(gamma zeta^(i-j)).
  const CycElem gamma = spec.alpha.embed() * spec.beta * conj(spec.beta);
  const std::vector<Rational> ext = gamma.extended_coeffs();
  Rational total = 0;
  for (const auto& c : ext) total += c;
  // Tr(sum_k e_k zeta^(k+d)) = p * e_{-d mod p} - sum_k e_k.
  std::vector<Rational> band(n);
  for (std::size_t d = 0; d < n; ++d) band[d] = Rational(p) * ext[(static_cast<std::size_t>(p) - d) % static_cast<std::size_t>(p)] - total;
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = band[i >= j ? i - j : j - i];
  return g;
}

RatMatrix ideal_gram_direct(const IdealLatticeSpec& spec) {
  spec.validate();
  const int p = spec.p;
  const std::size_t n = static_cast<std::size_t>(p - 1);
  const CycElem alpha = spec.alpha.embed();
  std::vector<CycElem> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(spec.beta * CycElem::zeta_power(p, static_cast<long>(i)));
  RatMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = trace(alpha * basis[i] * conj(basis[j]));
  return g;
}

Integer trace_form_discriminant(int p) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(p - 2));
  return r;
}

IdealLatticeReport check_properties(const IdealLatticeSpec& spec, const RatMatrix& gram) {
  spec.validate();
  IdealLatticeReport r;
  r.integral = is_integral(gram);
  r.even = r.integral;
  for (std::size_t i = 0; i < gram.rows() && r.even; ++i)
    if (!mpz_even_p(gram(i, i).get_num_mpz_t())) r.even = false;
  r.det = det(gram);
  const Rational ni = abs(norm_K(spec.beta));
  const Rational nf = norm_F(spec.alpha);
  r.expected_det = ni * ni * nf * nf * Rational(trace_form_discriminant(spec.p));
  r.disc_identity = abs(r.det) == r.expected_det;
  r.negative_embeddings = negative_embeddings(spec.alpha);
  r.from_embeddings = {spec.p - 1 - 2 * r.negative_embeddings, 2 * r.negative_embeddings};
  r.from_diagonalization = congruent_diag(gram);
  r.signature_agrees = r.from_embeddings == r.from_diagonalization;
  return r;
}

namespace {

// Exponent of `prime` in z, dividing it out.
long strip_prime(Integer& z, const Integer& prime) {
  long e = 0;
  while (z != 0 && mpz_divisible_p(z.get_mpz_t(), prime.get_mpz_t())) {
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t());
    ++e;
  }
  return e;
}

// Smallest prime with odd exponent in a non-square positive integer, found by
// trial division; falls back to the remaining cofactor.
std::pair<Integer, long> odd_exponent_prime(Integer z) {
  for (Integer d = 2; d * d <= z; ++d) {
    long e = strip_prime(z, d);
    if (e % 2) return {d, e};
  }
  return {z, 1};
}

}  // namespace

ObstructionResult unimodular_obstruction(int p, const Rational& target_det) {
  if (!is_odd_prime(p)) throw Error("unimodular_obstruction: " + std::to_string(p) + " is not an odd prime");
  if (sgn(target_det) <= 0) throw Error("unimodular_obstruction: target determinant must be positive");
  ObstructionResult r;
  r.rhs = target_det / Rational(trace_form_discriminant(p));
  Integer num = r.rhs.get_num(), den = r.rhs.get_den();
  const Integer prime(p);
  long e = strip_prime(num, prime) - strip_prime(den, prime);
  if (e % 2) {
    r.verdict = ObstructionVerdict::kUnsolvable;
    r.witness_prime = prime;
    r.witness_exponent = e;
    return r;
  }
  for (Integer* part : {&num, &den}) {
    if (mpz_perfect_square_p(part->get_mpz_t())) continue;
    auto [q, k] = odd_exponent_prime(*part);
    r.verdict = ObstructionVerdict::kUnsolvable;
    r.witness_prime = q;
    r.witness_exponent = part == &num ? k : -k;
    return r;
  }
  r.verdict = ObstructionVerdict::kInconclusive;
  return r;
}

std::string to_string(ObstructionVerdict v) { return v == ObstructionVerdict::kUnsolvable ? "UNSOLVABLE" : "INCONCLUSIVE"; }

IntMatrix cyclotomic_companion(int p) {
  if (!is_odd_prime(p)) throw Error("cyclotomic_companion: " + std::to_string(p) + " is not an odd prime");
  return companion_matrix(std::vector<Integer>(static_cast<std::size_t>(p), Integer(1)));
}

}  // namespace cyclolat
