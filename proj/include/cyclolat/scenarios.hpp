#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cyclolat/cyclotomic.hpp"
#include "cyclolat/lattice.hpp"
#include "cyclolat/serialize.hpp"
#include "cyclolat/unit_search.hpp"

namespace cyclolat {

enum class Case {
  kP5Example,
  kP13Obstruction,
  kP23Construction,
  kP23Glue,
  kP23Embeddings,
  kAppendixMatrix,
  kPeriodChecks,
};

std::string to_string(Case c);
/// Accepts the upper-case names, e.g. "P23_GLUE". Throws ParseError.
Case parse_case(std::string_view name);
std::vector<Case> all_cases();

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  bool passed = false;
};

struct Report {
  std::string case_name;
  std::vector<Check> checks;
  /// Remarks that are not checks (recorded discrepancies, provenance).
  std::vector<std::string> notes;

  bool passed() const;
  Json to_json() const;
  std::string to_text() const;
};

/// $CYCLOLAT_FIXTURES when set, otherwise the fixtures directory of the
/// source tree.
std::filesystem::path fixture_dir();

/// Throws ParseError naming the file when a fixture is missing.
std::filesystem::path fixture_path(const std::filesystem::path& dir, const std::string& relative);

// Building blocks shared by the reports, the CLI and the tests.

/// The p = 23 search spec shipped in specs/p23_search.json.
SearchSpec p23_search_spec(const std::filesystem::path& dir);
/// sign and exponent vector of the p = 23 construction (expected/p23.json).
std::pair<int, std::vector<long>> p23_exponents(const std::filesystem::path& dir);
RealElem p23_alpha(const std::filesystem::path& dir);
/// matrices/appendix23.mat as a lattice.
Lattice appendix_lattice(const std::filesystem::path& dir);

/// S + <46> glued along 2 sigma + 4 tau, where sigma generates A_S with
/// q(sigma) = 44/23 and tau = t/46.
struct GlueConstruction {
  GlueSpec spec;
  Overlattice result;
  std::vector<Rational> glue;
  std::vector<Rational> t_vector;  // ambient coordinates of t
};
GlueConstruction p23_glue(const Lattice& s);

/// L = E8^2 + U^3 + <-2> with basis E8 (0-15), U (16-21), <-2> (22). The
/// vector 2e + 12f + delta uses e = 16, f = 17, delta = 22.
Lattice k3_2_lattice();
IntMatrix embedding_vector(long e_coeff, long f_coeff, long delta_coeff);

/// omega_i = sum_{j=0}^{21-i} xi^j, entries of Q[xi] / Phi_23 stored as
/// elements of Q(zeta_23).
std::vector<CycElem> period_vector();
/// The upper triangular all-ones matrix J with omega = J Xi.
IntMatrix period_j_matrix();

struct PeriodValues {
  CycElem self_pairing;       // omega^T M omega
  RealElem hermitian_pairing; // omega^T M conj(omega)
  Interval hermitian_value;   // at xi = exp(2 pi i / 23)
  Integer det_mj;
  bool eigenvector = false;   // C omega = xi omega
};
PeriodValues compute_period_values(const IntMatrix& m, int precision = 64);

Report reproduce(Case c, const std::filesystem::path& dir);
Report reproduce(Case c);
Report period_checks(const std::filesystem::path& dir);

}  // namespace cyclolat
