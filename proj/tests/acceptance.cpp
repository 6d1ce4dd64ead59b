#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

#include "cyclolat/ideal_lattice.hpp"
#include "cyclolat/scenarios.hpp"

using namespace cyclolat;
using oracle::rat;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + ("failed: " + what);
    }
  }
};

const IntMatrix kP5Printed{{2, 1, -2, -2}, {1, 2, 1, -2}, {-2, 1, 2, 1}, {-2, -2, 1, 2}};

SearchSpec spec23() { return p23_search_spec(fixture_dir()); }

const std::vector<long> kNu{2, 1, 2, 2, 0, 1, 1, 2, 1, 0};

Outcome appendix() {
  Outcome o;
  const SearchSpec s = spec23();
  const RatMatrix g = ideal_gram(IdealLatticeSpec::unit_ideal(twist(s, 1, kNu)));
  const Lattice printed = appendix_lattice(fixture_dir());
  o.require(g.rows() == 22 && g.cols() == 22, "22 x 22");
  o.require(is_integral(g) && to_integer(g) == printed.gram(), "entrywise equality with the printed matrix");
  return o;
}

Outcome p23_invariants() {
  Outcome o;
  const Lattice s = appendix_lattice(fixture_dir());
  o.require(signature(s) == Signature{2, 20}, "signature (2,20)");
  o.require(abs(s.det()) == 23, "|det| = 23");
  const DiscForm f = discriminant_form(s);
  o.require(f.orders == std::vector<Integer>{23}, "A_S = Z/23");
  o.require(f.qvalues.size() == 1 && oracle::mod2(f.qvalues[0]) == rat(44, 23), "q = 44/23 mod 2");
  o.require(oracle::brute_force_form(IntMatrix{{-12, 1}, {1, -2}}) == f.value_multiset(), "value multiset");
  return o;
}

Outcome isometry() {
  Outcome o;
  const IsometryReport r = verify_isometry(appendix_lattice(fixture_dir()), cyclotomic_companion(23), 23);
  o.require(r.preserves_form, "C^T M C = M");
  o.require(r.order_exact, "exact order 23");
  o.require(r.char_poly == std::vector<Integer>(23, Integer(1)), "characteristic polynomial Phi_23");
  o.require(r.discriminant_action_trivial, "trivial action on A_S");
  return o;
}

Outcome unit_search() {
  Outcome o;
  SearchSpec s = spec23();
  s.box.assign(10, {0, 2});
  s.signs = {1};
  const SearchResult r1 = search(s, 1);
  bool found = false;
  for (const auto& sol : r1.solutions) found = found || (sol.sign == 1 && sol.exponents == kNu);
  o.require(found, "contains (2,1,2,2,0,1,1,2,1,0)");
  const std::string reference = search_json(s, r1).dump();
  for (unsigned jobs : {4u, 8u}) o.require(search_json(s, search(s, jobs)).dump() == reference, "identical with " + std::to_string(jobs) + " workers");
  o.detail = std::to_string(r1.stats.candidates) + " candidates, " + std::to_string(r1.solutions.size()) + " solutions" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome p5_example() {
  Outcome o;
  const RatMatrix g = ideal_gram(IdealLatticeSpec::unit_ideal(parse_real_elem(5, "4/5,3/5")));
  o.require(is_integral(g) && to_integer(g) == kP5Printed, "printed 4 x 4 matrix");
  const Lattice l(kP5Printed);
  o.require(signature(l) == Signature{2, 2}, "signature (2,2)");
  const DiscForm f = discriminant_form(l);
  o.require(f.orders == std::vector<Integer>{5}, "A = Z/5");
  o.require(f.value_multiset() == oracle::brute_force_form(IntMatrix{{2, 1}, {1, -2}}), "q-values of Z/5(2/5)");
  o.require(f.qvalues.size() == 1 && (f.qvalues[0] == rat(2, 5) || f.qvalues[0] == rat(8, 5)), "generator value 2/5 up to squares");
  return o;
}

Outcome p13() {
  Outcome o;
  const ObstructionResult r = unimodular_obstruction(13, Rational(1));
  o.require(r.verdict == ObstructionVerdict::kUnsolvable, "UNSOLVABLE");
  o.require(r.witness_prime && *r.witness_prime == 13, "witness 13");
  o.require(std::labs(r.witness_exponent) == 11, "odd exponent 11");
  return o;
}

Outcome glue() {
  Outcome o;
  const Lattice s = appendix_lattice(fixture_dir());
  const GlueConstruction g = p23_glue(s);
  const Lattice& m = g.result.lattice;
  o.require(m.rank() == 23, "rank 23");
  o.require(signature(m) == Signature{3, 20}, "signature (3,20)");
  o.require(g.result.index == 23, "index 23");
  o.require(abs(m.det()) == 2, "det 2");
  const DiscForm f = discriminant_form(m);
  o.require(f.orders == std::vector<Integer>{2} && f.qvalues == std::vector<Rational>{rat(3, 2)}, "q = 3/2 on Z/2");
  IntMatrix phi = IntMatrix::identity(23);
  const IntMatrix c = cyclotomic_companion(23);
  for (std::size_t i = 0; i < 22; ++i)
    for (std::size_t j = 0; j < 22; ++j) phi(i, j) = c(i, j);
  const RatMatrix t = g.result.transport(phi);
  o.require(is_integral(t) && verify_isometry(m, to_integer(t), 23).passed(), "phi + id extends");
  return o;
}

Outcome embeddings() {
  Outcome o;
  const Lattice l = k3_2_lattice();
  const Lattice s = appendix_lattice(fixture_dir());
  const Lattice t1 = orthogonal_complement(l, embedding_vector(2, 12, 1));
  o.require(signature(t1) == signature(s) && abs(t1.det()) == abs(s.det()) &&
                equivalent_forms(discriminant_form(t1), discriminant_form(s)),
            "complement of 2e+12f+delta");
  const Lattice t2 = orthogonal_complement(l, embedding_vector(1, 23, 0));
  const Lattice model = lattice_from_expression("E8^2 + U + <-2> + <2> + K23");
  o.require(signature(t2) == signature(model) && abs(t2.det()) == abs(model.det()) &&
                equivalent_forms(discriminant_form(t2), discriminant_form(model)),
            "complement of e+23f");
  return o;
}

Outcome periods() {
  Outcome o;
  const Lattice s = appendix_lattice(fixture_dir());
  const PeriodValues v = compute_period_values(s.gram());
  o.require(v.self_pairing.is_zero(), "omega^T M omega = 0");
  o.require(v.hermitian_value.sign() > 0, "omega^T M conj(omega) > 0");
  o.require(v.det_mj != 0, "det(MJ) != 0");
  o.require(v.eigenvector, "C omega = xi omega");
  o.detail = "omega^T M conj(omega) in [" + to_decimal(v.hermitian_value.lower, 4) + ", " +
             to_decimal(v.hermitian_value.upper, 4) + "], det(MJ) = " + v.det_mj.get_str() +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome properties() {
  Outcome o;
  for (int p : {3, 5, 13, 23}) {
    const std::size_t n = static_cast<std::size_t>(p - 1);
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = trace(mul(CycElem::zeta_power(p, static_cast<long>(i)), conj(CycElem::zeta_power(p, static_cast<long>(j)))));
    Integer expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(p - 2));
    o.require(abs(oracle::gauss_det(m)) == Rational(expected) && trace_form_discriminant(p) == expected,
              "D_K = p^(p-2) for p = " + std::to_string(p));
  }
  std::mt19937 rng(20240);
  static const int primes[] = {3, 5, 7, 11, 13};
  std::uniform_int_distribution<int> pick(0, 4), mode(0, 2);
  int integral = 0;
  for (int t = 0; t < 100; ++t) {
    IdealLatticeSpec s;
    s.p = primes[pick(rng)];
    const int m = mode(rng);
    s.alpha = m == 0 ? oracle::random_real(rng, s.p, 4, 1)
                     : m == 1 ? oracle::random_real(rng, s.p, 6, 1) * (Rational(1) / s.p) : oracle::random_real(rng, s.p, 5, 3);
    s.beta = mode(rng) == 0 ? CycElem::one(s.p) : oracle::random_cyc(rng, s.p, 2, 1);
    if (s.beta.is_zero()) s.beta = CycElem::one(s.p);
    const RatMatrix g = ideal_gram(s);
    const RatMatrix c = to_rational(cyclotomic_companion(s.p));
    o.require(c.transpose() * g * c == g, "C^T G C = G (spec " + std::to_string(t) + ")");
    const IdealLatticeReport r = check_properties(s, g);
    o.require(r.signature_agrees, "signature agreement (spec " + std::to_string(t) + ")");
    if (r.integral) {
      ++integral;
      bool even = true;
      for (std::size_t i = 0; i < g.rows(); ++i) even = even && mpz_even_p(g(i, i).get_num_mpz_t());
      o.require(even && r.even, "evenness (spec " + std::to_string(t) + ")");
    }
  }
  int tested = 0;
  const Lattice ambient = direct_sum(hyperbolic_plane(), hyperbolic_plane());
  std::uniform_int_distribution<int> d(-4, 4);
  for (int t = 0; t < 2000 && tested < 40; ++t) {
    IntMatrix v(4, 1);
    Integer gcd = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      v(i, 0) = d(rng);
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), v(i, 0).get_mpz_t());
    }
    if (gcd != 1) continue;
    const Integer norm = (v.transpose() * ambient.gram() * v)(0, 0);
    if (norm == 0 || abs(norm) > 24) continue;
    ++tested;
    const Lattice comp = orthogonal_complement(ambient, v);
    const auto sub_values = oracle::brute_force_form(IntMatrix{{norm.get_si()}});
    const auto comp_values = oracle::brute_force_form(comp.gram());
    o.require(oracle::negated(sub_values) == comp_values && discriminant_form(comp).value_multiset() == comp_values,
              "q_sub = -q_complement");
  }
  o.require(tested >= 30, "enough complement instances");
  o.detail = std::to_string(integral) + "/100 integral specs, " + std::to_string(tested) + " complement instances" +
             (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "p = 23 Gram matrix reproduction", 5, appendix},
      {2, "p = 23 invariants", 10, p23_invariants},
      {3, "isometry verification", 5, isometry},
      {4, "unit search", 900, unit_search},
      {5, "p = 5 example", 1, p5_example},
      {6, "p = 13 obstruction", 1, p13},
      {7, "gluing", 10, glue},
      {8, "embedding complements", 10, embeddings},
      {9, "period checks", 30, periods},
      {10, "property suites", 900, properties},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.passed && secs < c.limit;
    if (!ok) ++failures;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3f s, limit %g s", secs, c.limit);
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << " (" << timing << ") " << c.name;
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    if (o.passed && secs >= c.limit) std::cout << " [over time limit]";
    std::cout << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
