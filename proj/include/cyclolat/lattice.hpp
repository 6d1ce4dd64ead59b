#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclolat/linalg.hpp"
#include "cyclolat/matrix.hpp"

namespace cyclolat {

class DegenerateLatticeError : public Error {
 public:
  using Error::Error;
};

/// A sublattice whose generators do not span a primitive sublattice.
class NonPrimitiveError : public Error {
 public:
  NonPrimitiveError(const std::string& what, Integer factor) : Error(what), factor_(std::move(factor)) {}
  const Integer& factor() const { return factor_; }

 private:
  Integer factor_;
};

/// Integral lattice given by a symmetric nondegenerate Gram matrix.
class Lattice {
 public:
  explicit Lattice(IntMatrix gram, std::string label = {});

  const IntMatrix& gram() const { return gram_; }
  const std::string& label() const { return label_; }
  std::size_t rank() const { return gram_.rows(); }
  /// Signed determinant of the Gram matrix.
  const Integer& det() const { return det_; }
  bool is_even() const;

  Lattice relabeled(std::string label) const { return Lattice(gram_, std::move(label), det_); }

 private:
  Lattice(IntMatrix gram, std::string label, Integer det)
      : gram_(std::move(gram)), label_(std::move(label)), det_(std::move(det)) {}

  IntMatrix gram_;
  std::string label_;
  Integer det_;
};

// Standard lattices. Root lattices use the negative definite convention.
Lattice hyperbolic_plane();  // U
Lattice e8();
Lattice a_n(int n);
Lattice k23();  // [[-12, 1], [1, -2]]
Lattice h5();   // [[2, 1], [1, -2]]
Lattice diagonal_lattice(const std::vector<long>& entries);

/// One of "U", "E8", "A<n>", "K23", "H5", "<d>" or "diag(d1,d2,...)".
Lattice standard_lattice(std::string_view name);

/// Direct sum expression such as "E8^2 + U^3 + <-2>"; terms are standard
/// lattice names with an optional "^k" repetition count.
Lattice lattice_from_expression(std::string_view expr);

Lattice direct_sum(const Lattice& a, const Lattice& b);
Lattice direct_sum(const std::vector<Lattice>& parts);

Signature signature(const Lattice& l);

/// Discriminant group L^v / L from the Smith form of the Gram matrix. Orders
/// are the invariant factors > 1; generator i is column i of V divided by
/// d_i, reduced coordinatewise into [0, 1).
struct DiscGroup {
  std::vector<Integer> orders;
  std::vector<std::vector<Rational>> generators;

  Integer order() const;
  bool is_cyclic() const { return orders.size() <= 1; }
};
DiscGroup discriminant_group(const Lattice& l);

/// Discriminant quadratic form of an even lattice. q-values live in [0, 2),
/// pairings in [0, 1). A cyclic group's generator is replaced by the multiple
/// k g (gcd(k, d) = 1) whose q-value, read in (-1, 1], has the smallest
/// absolute value; ties go to the positive value, then to the smaller k.
struct DiscForm {
  std::vector<Integer> orders;
  std::vector<std::vector<Rational>> generators;
  std::vector<Rational> qvalues;
  RatMatrix pairings;

  Integer order() const;
  bool is_cyclic() const { return orders.size() <= 1; }
  /// Sorted q-values of every element of the group (all of A_L, not only the
  /// generators). Throws when the group has more than 2^20 elements.
  std::vector<Rational> value_multiset() const;
};

/// Throws Error for odd lattices.
DiscForm discriminant_form(const Lattice& l);

/// Multiset of q over the group generated by the given generators with the
/// given q-values and pairings (pairings may be empty for orthogonal
/// generators).
std::vector<Rational> form_value_multiset(const std::vector<Integer>& orders, const std::vector<Rational>& qvalues,
                                          const RatMatrix& pairings);

/// q(x) mod 2 and b(x, y) mod 1 for rational coordinate vectors.
Rational q_value(const Lattice& l, const std::vector<Rational>& x);
Rational b_value(const Lattice& l, const std::vector<Rational>& x, const std::vector<Rational>& y);

/// Same group structure and the same multiset of q-values. Complete for the
/// cyclic groups that occur here; a necessary condition in general.
bool equivalent_forms(const DiscForm& a, const DiscForm& b);

struct PElementary {
  bool flag = false;
  int length = 0;  // number of invariant factors equal to p
};
PElementary is_p_elementary(const Lattice& l, long p);

/// Columns of `sub` (in the lattice basis) must span a primitive sublattice.
/// Returns the Z-basis of the complement as columns, HNF-normalized.
/// Throws NonPrimitiveError or DegenerateLatticeError.
IntMatrix complement_basis(const Lattice& l, const IntMatrix& sub);
Lattice orthogonal_complement(const Lattice& l, const IntMatrix& sub);

/// Primitive closure (sub tensor Q) intersected with Z^n, as HNF columns.
IntMatrix saturate(const IntMatrix& sub);

/// Throws NonPrimitiveError unless the columns of `sub` are a basis of a
/// primitive sublattice.
void require_primitive(const IntMatrix& sub);

struct GlueSpec {
  Lattice first;
  Lattice second;
  /// Rational vectors in the basis of first (+) second.
  std::vector<std::vector<Rational>> glue_vectors;
};

struct Overlattice {
  Lattice lattice;
  /// Rows are the basis of the overlattice in coordinates of the direct sum.
  RatMatrix basis;
  Integer index;

  /// Coordinates in the overlattice basis of a vector given in direct-sum
  /// coordinates (rational in general).
  std::vector<Rational> coordinates(const std::vector<Rational>& ambient) const;
  /// Matrix of an isometry of the direct sum (acting on column vectors) in the
  /// overlattice basis. Rational entries mean the isometry does not extend.
  RatMatrix transport(const IntMatrix& ambient_isometry) const;
};

/// Throws Error when a glue vector is not in the dual of the sum, is not
/// isotropic (q not in 2Z), or the glued form is not integral.
Overlattice overlattice(const GlueSpec& spec);

struct IsometryReport {
  bool preserves_form = false;
  /// C^n = I and C^d != I for every proper divisor d of n.
  bool order_exact = false;
  unsigned long claimed_order = 0;
  std::vector<Integer> char_poly;
  bool discriminant_action_trivial = false;
  /// Multiplier k with C g = k g in A_L for cyclic discriminant groups.
  std::optional<Integer> discriminant_multiplier;

  bool passed() const { return preserves_form && order_exact; }
};

/// C acts on coordinate column vectors; throws on dimension mismatch.
IsometryReport verify_isometry(const Lattice& l, const IntMatrix& c, unsigned long order);

/// Summary used by reports and the CLI.
struct Invariants {
  std::size_t rank = 0;
  Signature signature;
  Integer det;
  bool even = false;
  std::vector<Integer> orders;
  std::optional<std::vector<Rational>> qvalues;  // even lattices only
  /// The prime p for which the lattice is p-elementary (none when unimodular
  /// or not p-elementary), with the length.
  std::optional<long> elementary_prime;
  int elementary_length = 0;
  bool p_elementary = false;
};
Invariants compute_invariants(const Lattice& l);

}  // namespace cyclolat
