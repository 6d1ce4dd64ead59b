#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cyclolat/matrix.hpp"

namespace cyclolat {

/// Raised for singular input where a nonsingular matrix is required.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Signed determinant by Bareiss fraction-free elimination.
Integer det(const IntMatrix& a);
Rational det(const RatMatrix& a);

int rank(const RatMatrix& a);
inline int rank(const IntMatrix& a) { return rank(to_rational(a)); }

/// Row Hermite normal form H = U * A with U unimodular. H is in row echelon
/// form, pivots are positive and entries above a pivot lie in [0, pivot).
/// Zero rows are moved to the bottom.
struct HermiteResult {
  IntMatrix H;
  IntMatrix U;
  int rank = 0;
};
HermiteResult hermite_form(const IntMatrix& a);

/// Smith normal form U * A * V = D with U, V unimodular and the diagonal of D
/// a nonnegative divisibility chain d1 | d2 | ... (zeros last).
struct SNFResult {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;

  std::vector<Integer> diagonal() const;
};
SNFResult snf(const IntMatrix& a);

/// Columns form a Z-basis of {x in Z^cols : A x = 0}, in column Hermite form.
/// An injective A gives a cols x 0 matrix.
IntMatrix int_kernel(const IntMatrix& a);

/// Throws SingularMatrixError when det(A) = 0.
RatMatrix rational_inverse(const IntMatrix& a);
RatMatrix rational_inverse(const RatMatrix& a);

/// Solution of A x = b, or nullopt when the system is inconsistent. Free
/// variables are set to zero.
std::optional<std::vector<Rational>> rational_solve(const RatMatrix& a, const std::vector<Rational>& b);

/// Signature (s+, s-) of a nondegenerate symmetric form via rational
/// congruent diagonalization P^T G P = D (Sylvester's law of inertia).
/// Throws SingularMatrixError for degenerate forms.
struct Signature {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature congruent_diag(const IntMatrix& g);
Signature congruent_diag(const RatMatrix& g);

/// Characteristic polynomial det(xI - A), coefficients low to high (monic).
/// Faddeev-LeVerrier with exact integer division.
std::vector<Integer> char_poly(const IntMatrix& a);

IntMatrix matrix_power(const IntMatrix& a, unsigned long e);

/// Companion matrix of a monic polynomial c0 + c1 x + ... + x^n: ones on the
/// subdiagonal and -c_i in the last column, so column j is the image of x^j
/// under multiplication by x.
IntMatrix companion_matrix(const std::vector<Integer>& monic);

/// lcm of all denominators.
Integer common_denominator(const RatMatrix& m);
Integer common_denominator(const std::vector<Rational>& v);

}  // namespace cyclolat
