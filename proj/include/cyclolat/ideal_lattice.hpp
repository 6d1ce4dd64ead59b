#pragma once

#include <optional>
#include <string>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/linalg.hpp"
#include "cyclolat/matrix.hpp"

namespace cyclolat {

/// Principal fractional ideal I = beta O_K with the twisted trace form
/// <x, y> = Tr(alpha x conj(y)), alpha in the real subfield.
struct IdealLatticeSpec {
  int p = 0;
  CycElem beta;
  RealElem alpha;

  /// beta = 1.
  static IdealLatticeSpec unit_ideal(RealElem alpha);
  void validate() const;
};

/// Gram matrix in the basis (beta, beta zeta, ..., beta zeta^(p-2)). Entry
/// (i, j) depends only on i - j because alpha * beta * conj(beta) is real.
RatMatrix ideal_gram(const IdealLatticeSpec& spec);

/// Entry-by-entry evaluation of Tr(alpha b_i conj(b_j)) without the Toeplitz
/// shortcut.
RatMatrix ideal_gram_direct(const IdealLatticeSpec& spec);

struct IdealLatticeReport {
  bool integral = false;
  /// All diagonal entries even; always true when integral.
  bool even = false;
  Rational det;            // det of the Gram matrix
  Rational expected_det;   // N(I)^2 * N_{F/Q}(alpha)^2 * p^(p-2)
  bool disc_identity = false;
  int negative_embeddings = 0;  // t
  Signature from_embeddings;    // (p-1-2t, 2t)
  Signature from_diagonalization;
  bool signature_agrees = false;
};

IdealLatticeReport check_properties(const IdealLatticeSpec& spec, const RatMatrix& gram);

/// p^(p-2): determinant of the trace pairing (x, y) -> Tr(x conj(y)) on O_K.
Integer trace_form_discriminant(int p);

enum class ObstructionVerdict { kUnsolvable, kInconclusive };

struct ObstructionResult {
  ObstructionVerdict verdict = ObstructionVerdict::kInconclusive;
  /// target_det / p^(p-2), the required value of N(I)^2 N_{F/Q}(alpha)^2.
  Rational rhs;
  /// For kUnsolvable: a prime with odd exponent in rhs and that exponent.
  std::optional<Integer> witness_prime;
  long witness_exponent = 0;
};

/// Square-class test for N(I)^2 N_{F/Q}(alpha)^2 = target_det / p^(p-2).
/// target_det must be positive.
ObstructionResult unimodular_obstruction(int p, const Rational& target_det);

std::string to_string(ObstructionVerdict v);

/// Companion matrix of Phi_p: the action of multiplication by zeta on the
/// power basis.
IntMatrix cyclotomic_companion(int p);

}  // namespace cyclolat
