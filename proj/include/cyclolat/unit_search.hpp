#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/lattice.hpp"
#include "cyclolat/linalg.hpp"

namespace cyclolat {

/// A list of units of O_F (no fundamentality claim; only |N_{F/Q}| = 1 is
/// checked).
struct UnitSystem {
  int p = 0;
  std::vector<RealElem> units;
  std::string provenance;
};

/// Raised by load_units for an element that is not a unit.
class NotAUnitError : public Error {
 public:
  NotAUnitError(const std::string& what, std::size_t index) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Units given as mu-basis coefficient strings. `declared_rank`, when set,
/// must equal the number of units.
UnitSystem make_unit_system(int p, const std::vector<std::string>& units, std::string provenance,
                            std::optional<int> declared_rank = std::nullopt);

struct ExponentRange {
  long lo = 0;
  long hi = 0;  // inclusive
  std::size_t size() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
};

struct TargetInvariants {
  Signature signature;
  std::vector<Integer> orders;
  /// q-values of the generators; generators are taken to be orthogonal.
  std::vector<Rational> qvalues;
};

struct SearchSpec {
  int p = 0;
  RealElem alpha0;
  UnitSystem units;
  std::vector<ExponentRange> box;  // one range per unit
  std::vector<int> signs;          // subset of {+1, -1}
  TargetInvariants target;
  std::string box_note;

  void validate() const;
};

struct SearchSolution {
  int sign = 1;
  std::vector<long> exponents;
  RealElem alpha;
  IntMatrix gram;
  Signature signature;
  Integer det;
  std::vector<Integer> orders;
  std::vector<Rational> qvalues;
};

struct SearchStats {
  unsigned long long candidates = 0;
  unsigned long long passed_signs = 0;     // stage (i)
  unsigned long long passed_integral = 0;  // stage (ii)
  unsigned long long passed_det = 0;       // stage (iii)
  unsigned long long passed_form = 0;      // stage (iv)
};

struct SearchResult {
  std::vector<SearchSolution> solutions;
  SearchStats stats;
};

/// Enumerates sign x box in lexicographic order (signs in the order +1, -1;
/// first exponent most significant) and keeps candidates passing, in order:
/// (i) certified embedding sign count, (ii) Gram integrality, (iii) the exact
/// determinant identity and target |det|, (iv) discriminant form match. The
/// candidate range is split into `jobs` contiguous chunks; the merged output
/// is identical for every job count.
SearchResult search(const SearchSpec& spec, unsigned jobs = 1);

/// alpha = sign * alpha0 * prod units[i]^exponents[i].
RealElem twist(const SearchSpec& spec, int sign, const std::vector<long>& exponents);

}  // namespace cyclolat
