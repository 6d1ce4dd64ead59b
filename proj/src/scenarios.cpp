#include "cyclolat/scenarios.hpp"

#include <cstdlib>
#include <sstream>

#include "cyclolat/ideal_lattice.hpp"

#ifndef CYCLOLAT_FIXTURE_DIR
#define CYCLOLAT_FIXTURE_DIR "fixtures"
#endif

namespace cyclolat {

namespace {

constexpr std::pair<Case, const char*> kCaseNames[] = {
    {Case::kP5Example, "P5_EXAMPLE"},         {Case::kP13Obstruction, "P13_OBSTRUCTION"},
    {Case::kP23Construction, "P23_CONSTRUCTION"}, {Case::kP23Glue, "P23_GLUE"},
    {Case::kP23Embeddings, "P23_EMBEDDINGS"}, {Case::kAppendixMatrix, "APPENDIX_MATRIX"},
    {Case::kPeriodChecks, "PERIOD_CHECKS"},
};

std::string str(const Signature& s) { return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")"; }

std::string str(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + "]";
}

std::string str(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + to_string(v[i]);
  return out + "]";
}

std::string str(bool b) { return b ? "true" : "false"; }

std::string str(const std::vector<long>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + ")";
}

class ReportBuilder {
 public:
  explicit ReportBuilder(Case c) { report_.case_name = to_string(c); }

  void check(std::string name, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    report_.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  }
  void check(std::string name, std::string expected, std::string computed, bool ok) {
    report_.checks.push_back({std::move(name), std::move(expected), std::move(computed), ok});
  }
  void note(std::string text) { report_.notes.push_back(std::move(text)); }
  Report take() { return std::move(report_); }

 private:
  Report report_;
};

// A lattice's invariant triple: signature, |det|, discriminant form.
void check_triple(ReportBuilder& b, const std::string& prefix, const Lattice& computed, const Lattice& model) {
  const Signature sc = signature(computed), sm = signature(model);
  b.check(prefix + " signature", str(sm), str(sc));
  b.check(prefix + " |det|", to_string(Integer(abs(model.det()))), to_string(Integer(abs(computed.det()))));
  const DiscForm fc = discriminant_form(computed), fm = discriminant_form(model);
  b.check(prefix + " discriminant orders", str(fm.orders), str(fc.orders));
  b.check(prefix + " discriminant form equivalent to " + model.label(), "q " + str(fm.qvalues), "q " + str(fc.qvalues),
          equivalent_forms(fc, fm));
}

Report p5_example(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kP5Example);
  const RealElem alpha = parse_real_elem(5, "4/5,3/5");
  b.check("norm_F(alpha)", "-1/5", to_string(norm_F(alpha)));
  b.check("norm_K(alpha) = norm_F(alpha)^2", "1/25", to_string(norm_K(alpha.embed())));
  const auto spec = IdealLatticeSpec::unit_ideal(alpha);
  const RatMatrix gram = ideal_gram(spec);
  const Lattice printed = load_lattice(fixture_path(dir, "matrices/p5_example.mat"));
  b.check("Gram equals printed matrix", "equal", gram == to_rational(printed.gram()) ? "equal" : "differs");
  const auto props = check_properties(spec, gram);
  b.check("integral", "true", str(props.integral));
  b.check("even", "true", str(props.even));
  b.check("|det| = N_F(alpha)^2 5^3", "5", to_string(props.det < 0 ? Rational(-props.det) : props.det), props.disc_identity);
  b.check("negative embeddings t", "1", std::to_string(props.negative_embeddings));
  b.check("signature by diagonalization agrees", "true", str(props.signature_agrees));
  const Lattice s(to_integer(gram), "I_alpha");
  const Invariants inv = compute_invariants(s);
  b.check("signature", "(2,2)", str(inv.signature));
  b.check("discriminant group", "[5]", str(inv.orders));
  b.check("q on generator", "[2/5]", inv.qvalues ? str(*inv.qvalues) : "odd");
  b.check("5-elementary length", "1", inv.p_elementary && inv.elementary_prime == 5 ? std::to_string(inv.elementary_length) : "no");
  check_triple(b, "U+H5", s, lattice_from_expression("U + H5").relabeled("U+H5"));
  const auto iso = verify_isometry(s, cyclotomic_companion(5), 5);
  b.check("companion(Phi_5) preserves form", "true", str(iso.preserves_form));
  b.check("companion(Phi_5) order", "5", iso.order_exact ? "5" : "not 5");
  SearchSpec search_spec = load_search_spec(fixture_path(dir, "specs/p5_search.json"));
  const auto found = search(search_spec, 1);
  std::string sols;
  for (const auto& x : found.solutions) sols += (sols.empty() ? "" : ";") + format_elem(x.alpha);
  b.check("search over box {0}, sign +1", "4/5,3/5", sols);
  // -alpha gives the form Z/5(-2/5), isometric to Z/5(2/5) through g -> 2g,
  // so the negated seed survives every filter.
  search_spec.signs = {-1};
  sols.clear();
  for (const auto& x : search(search_spec, 1).solutions) sols += (sols.empty() ? "" : ";") + format_elem(x.alpha);
  b.check("search over box {0}, sign -1", "-4/5,-3/5", sols);
  return b.take();
}

Report p13_obstruction() {
  ReportBuilder b(Case::kP13Obstruction);
  const auto r = unimodular_obstruction(13, Rational(1));
  b.check("verdict for p=13, d=1", "UNSOLVABLE", to_string(r.verdict));
  b.check("required N(I)^2 N_F(alpha)^2", "1/" + to_string(Integer(trace_form_discriminant(13))), to_string(r.rhs));
  b.check("witness prime", "13", r.witness_prime ? to_string(*r.witness_prime) : "none");
  b.check("odd witness exponent |e|", "11", std::to_string(std::labs(r.witness_exponent)));
  b.check("verdict for p=23, d=23", "INCONCLUSIVE", to_string(unimodular_obstruction(23, Rational(23)).verdict));
  b.check("verdict for p=5, d=5", "INCONCLUSIVE", to_string(unimodular_obstruction(5, Rational(5)).verdict));
  return b.take();
}

Report p23_construction(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kP23Construction);
  const SearchSpec spec = p23_search_spec(dir);
  b.check("unit count", "10", std::to_string(spec.units.units.size()));
  b.check("|norm_F(alpha0)|", "1/41426511213649", to_string(Rational(abs(norm_F(spec.alpha0)))));
  const auto [sign, exps] = p23_exponents(dir);
  const RealElem alpha = twist(spec, sign, exps);
  const auto ispec = IdealLatticeSpec::unit_ideal(alpha);
  const RatMatrix gram = ideal_gram(ispec);
  const auto props = check_properties(ispec, gram);
  b.check("integral", "true", str(props.integral));
  b.check("even", "true", str(props.even));
  b.check("disc identity |det| = N_F(alpha)^2 23^21", "23", to_string(props.det < 0 ? Rational(-props.det) : props.det),
          props.disc_identity);
  b.check("negative embeddings t", "10", std::to_string(props.negative_embeddings));
  b.check("signature by diagonalization agrees", "true", str(props.signature_agrees));
  const Lattice s(to_integer(gram), "S");
  const Invariants inv = compute_invariants(s);
  b.check("signature", "(2,20)", str(inv.signature));
  b.check("|det|", "23", to_string(Integer(abs(inv.det))));
  b.check("discriminant group", "[23]", str(inv.orders));
  b.check("q on generator", "[44/23]", inv.qvalues ? str(*inv.qvalues) : "odd");
  check_triple(b, "S", s, lattice_from_expression("E8^2 + U^2 + K23").relabeled("E8^2+U^2+K23"));
  const auto iso = verify_isometry(s, cyclotomic_companion(23), 23);
  b.check("companion(Phi_23) preserves Gram", "true", str(iso.preserves_form));
  b.check("order exactly 23", "true", str(iso.order_exact));
  b.check("characteristic polynomial", str(std::vector<Integer>(23, Integer(1))), str(iso.char_poly));
  b.check("discriminant action", "trivial", iso.discriminant_action_trivial ? "trivial" : "nontrivial");
  const auto found = search(spec, 1);
  bool contains = false;
  for (const auto& x : found.solutions) contains = contains || (x.sign == sign && x.exponents == exps);
  b.check("search contains nu", "contains " + str(exps),
          (contains ? "contains " : "misses ") + str(exps) + " among " + std::to_string(found.solutions.size()), contains);
  b.note("search box: " + spec.box_note);
  return b.take();
}

Report p23_glue_report(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kP23Glue);
  const Lattice s = appendix_lattice(dir);
  const GlueConstruction g = p23_glue(s);
  const Lattice& m = g.result.lattice;
  const Invariants inv = compute_invariants(m);
  b.check("rank", "23", std::to_string(inv.rank));
  b.check("signature", "(3,20)", str(inv.signature));
  b.check("index [M : S+T]", "23", to_string(g.result.index));
  b.check("det", "2", to_string(Integer(abs(inv.det))));
  b.check("det(S+T) / index^2", "2", to_string(Rational(abs(s.det()) * 46) / Rational(g.result.index * g.result.index)));
  b.check("even", "true", str(inv.even));
  b.check("discriminant group", "[2]", str(inv.orders));
  b.check("q on generator", "[3/2]", inv.qvalues ? str(*inv.qvalues) : "odd");
  const Rational q23tau = mod_positive(Rational(23 * 23) / 46, 2);
  b.check("q(23 tau)", "3/2", to_string(q23tau));
  // M should have the invariants of L.
  check_triple(b, "M", m, k3_2_lattice().relabeled("E8^2+U^3+<-2>"));
  // phi + id on S + T, carried to M.
  IntMatrix ambient = block_diagonal(cyclotomic_companion(23), IntMatrix::identity(1));
  const RatMatrix carried = g.result.transport(ambient);
  const bool integral = is_integral(carried);
  b.check("phi+id integral on M", "true", str(integral));
  if (integral) {
    const auto iso = verify_isometry(m, to_integer(carried), 23);
    b.check("phi+id preserves Gram of M", "true", str(iso.preserves_form));
    b.check("phi+id order exactly 23", "true", str(iso.order_exact));
    const auto tc = g.result.coordinates(g.t_vector);
    b.check("phi+id fixes t", "true", str(carried * tc == tc));
  }
  b.note("the printed symbol for A_M is Z/23Z(3/2); the computed group is Z/2 generated by 23 tau with q = 3/2, "
         "consistent with det M = 2 and with the invariants of L");
  return b.take();
}

Report p23_embeddings(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kP23Embeddings);
  const Lattice l = k3_2_lattice();
  b.check("L rank", "23", std::to_string(l.rank()));
  b.check("L signature", "(3,20)", str(signature(l)));
  const IntMatrix t1 = embedding_vector(2, 12, 1);
  const IntMatrix t2 = embedding_vector(1, 23, 0);
  b.check("t1^2", "46", to_string((t1.transpose() * l.gram() * t1)(0, 0)));
  b.check("t2^2", "46", to_string((t2.transpose() * l.gram() * t2)(0, 0)));
  const Lattice c1 = orthogonal_complement(l, t1).relabeled("t1-perp");
  const Lattice c2 = orthogonal_complement(l, t2).relabeled("t2-perp");
  const Lattice s_model = lattice_from_expression("E8^2 + U^2 + K23").relabeled("E8^2+U^2+K23");
  const Lattice second = lattice_from_expression("E8^2 + U + <-2> + <2> + K23").relabeled("E8^2+U+<-2>+<2>+K23");
  check_triple(b, "(2e+12f+delta)-perp", c1, s_model);
  check_triple(b, "(e+23f)-perp", c2, second);
  // S has the same triple as the first complement.
  const Lattice s = appendix_lattice(dir);
  b.check("first complement equivalent to S", "true",
          str(equivalent_forms(discriminant_form(c1), discriminant_form(s)) && signature(c1) == signature(s)));
  const DiscForm f1 = discriminant_form(c1), f2 = discriminant_form(c2);
  b.check("the two triples differ", "true", str(f1.orders != f2.orders || !equivalent_forms(f1, f2)));
  return b.take();
}

Report appendix_matrix(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kAppendixMatrix);
  const Lattice fixture = appendix_lattice(dir);
  const RealElem alpha = p23_alpha(dir);
  const auto spec = IdealLatticeSpec::unit_ideal(alpha);
  const RatMatrix gram = ideal_gram(spec);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      if (gram(i, j) != Rational(fixture.gram()(i, j))) ++mismatches;
  b.check("size", "22x22", std::to_string(gram.rows()) + "x" + std::to_string(gram.cols()));
  b.check("entry mismatches against fixture", "0", std::to_string(mismatches));
  b.check("Toeplitz Gram equals direct trace evaluation", "true", str(gram == ideal_gram_direct(spec)));
  b.check("first row", "[-2,3,0,3,0,2,1,0,-1,-2,-2,-3,-3,-2,-2,-1,0,1,2,0,3,0]", [&] {
    std::vector<Rational> row(gram.row(0).begin(), gram.row(0).end());
    return str(row);
  }());
  b.check("det", "23", to_string(det(fixture.gram())));
  return b.take();
}

}  // namespace

std::string to_string(Case c) {
  for (const auto& [k, name] : kCaseNames)
    if (k == c) return name;
  return "UNKNOWN";
}

Case parse_case(std::string_view name) {
  for (const auto& [k, n] : kCaseNames)
    if (name == n) return k;
  throw ParseError("unknown case '" + std::string(name) + "'");
}

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (const auto& [k, name] : kCaseNames) out.push_back(k);
  return out;
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

Json Report::to_json() const {
  Json j;
  j["case"] = case_name;
  j["passed"] = passed();
  Json cs = Json::array();
  for (const auto& c : checks)
    cs.push_back({{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}});
  j["checks"] = cs;
  j["notes"] = notes;
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << case_name << ": " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : checks) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.name << ": " << c.computed;
    if (!c.passed) out << " (expected " << c.expected << ")";
    out << "\n";
  }
  for (const auto& n : notes) out << "  note: " << n << "\n";
  return out.str();
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("CYCLOLAT_FIXTURES"); env && *env) return env;
  return CYCLOLAT_FIXTURE_DIR;
}

std::filesystem::path fixture_path(const std::filesystem::path& dir, const std::string& relative) {
  std::filesystem::path p = dir / relative;
  if (!std::filesystem::exists(p)) throw ParseError("missing fixture " + p.string());
  return p;
}

SearchSpec p23_search_spec(const std::filesystem::path& dir) { return load_search_spec(fixture_path(dir, "specs/p23_search.json")); }

std::pair<int, std::vector<long>> p23_exponents(const std::filesystem::path& dir) {
  const Json j = Json::parse(read_file(fixture_path(dir, "expected/p23.json")));
  return {j.at("sign").get<int>(), j.at("exponents").get<std::vector<long>>()};
}

RealElem p23_alpha(const std::filesystem::path& dir) {
  const auto [sign, exps] = p23_exponents(dir);
  return twist(p23_search_spec(dir), sign, exps);
}

Lattice appendix_lattice(const std::filesystem::path& dir) {
  return load_lattice(fixture_path(dir, "matrices/appendix23.mat"));
}

GlueConstruction p23_glue(const Lattice& s) {
  const DiscForm fs = discriminant_form(s);
  if (fs.orders != std::vector<Integer>{Integer(23)} || fs.qvalues[0] != Rational(44, 23))
    throw Error("p23_glue: S must have discriminant form Z/23(44/23)");
  const Lattice t = diagonal_lattice({46}).relabeled("<46>");
  GlueConstruction g{GlueSpec{s, t, {}}, Overlattice{t, {}, 0}, {}, {}};
  for (const auto& c : fs.generators[0]) g.glue.push_back(2 * c);
  g.glue.push_back(Rational(4) / 46);
  g.spec.glue_vectors = {g.glue};
  g.t_vector.assign(s.rank() + 1, Rational(0));
  g.t_vector.back() = 1;
  g.result = overlattice(g.spec);
  return g;
}

Lattice k3_2_lattice() { return lattice_from_expression("E8^2 + U^3 + <-2>"); }

IntMatrix embedding_vector(long e_coeff, long f_coeff, long delta_coeff) {
  IntMatrix v(23, 1);
  v(16, 0) = e_coeff;
  v(17, 0) = f_coeff;
  v(22, 0) = delta_coeff;
  return v;
}

std::vector<CycElem> period_vector() {
  const int p = 23;
  std::vector<CycElem> omega;
  for (int i = 0; i <= 21; ++i) {
    CycElem w(p);
    for (int j = 0; j <= 21 - i; ++j) w += CycElem::zeta_power(p, j);
    omega.push_back(std::move(w));
  }
  return omega;
}

IntMatrix period_j_matrix() {
  IntMatrix j(22, 22);
  for (std::size_t r = 0; r < 22; ++r)
    for (std::size_t c = r; c < 22; ++c) j(r, c) = 1;
  return j;
}

PeriodValues compute_period_values(const IntMatrix& m, int precision) {
  if (m.rows() != 22 || m.cols() != 22) throw Error("period checks need a 22x22 Gram matrix");
  const int p = 23;
  const std::vector<CycElem> omega = period_vector();
  std::vector<CycElem> omega_bar;
  for (const auto& w : omega) omega_bar.push_back(conj(w));
  PeriodValues v{CycElem(p), RealElem(p), {}, 0, false};
  CycElem hermitian(p);
  for (std::size_t i = 0; i < 22; ++i) {
    CycElem row_self(p), row_bar(p);
    for (std::size_t j = 0; j < 22; ++j) {
      if (m(i, j) == 0) continue;
      const Rational c(m(i, j));
      row_self += omega[j] * c;
      row_bar += omega_bar[j] * c;
    }
    v.self_pairing += omega[i] * row_self;
    hermitian += omega[i] * row_bar;
  }
  const auto real = to_real(hermitian);
  if (!real) throw Error("omega^T M conj(omega) is not real");
  v.hermitian_pairing = *real;
  v.hermitian_value = eval_embeddings(*real, precision).front().value;
  v.det_mj = det(m * period_j_matrix());
  // Multiplication by zeta on S is the companion matrix; omega is its
  // xi-eigenvector.
  const IntMatrix c = cyclotomic_companion(p);
  const CycElem xi = CycElem::zeta_power(p, 1);
  bool eig = true;
  for (std::size_t i = 0; i < 22 && eig; ++i) {
    CycElem lhs(p);
    for (std::size_t j = 0; j < 22; ++j)
      if (c(i, j) != 0) lhs += omega[j] * Rational(c(i, j));
    eig = lhs == xi * omega[i];
  }
  v.eigenvector = eig;
  return v;
}

Report period_checks(const std::filesystem::path& dir) {
  ReportBuilder b(Case::kPeriodChecks);
  const Lattice s = appendix_lattice(dir);
  const Json expected = Json::parse(read_file(fixture_path(dir, "expected/period.json")));
  const PeriodValues v = compute_period_values(s.gram());
  b.check("C omega = xi omega", "true", str(v.eigenvector));
  b.check("omega^T M omega in Q[xi]/Phi_23", "0", v.self_pairing.is_zero() ? "0" : format_elem(v.self_pairing));
  const std::string interval = "[" + to_decimal(v.hermitian_value.lower, 6) + ", " + to_decimal(v.hermitian_value.upper, 6) + "]";
  b.check("omega^T M conj(omega) at xi = exp(2 pi i/23)", "> 0", interval, v.hermitian_value.sign() > 0);
  b.check("det(M J) nonzero", "nonzero", v.det_mj != 0 ? "nonzero" : "zero");
  b.check("det(M J)", to_string(json_integer(expected.at("det_MJ"), "expected/period.json")), to_string(v.det_mj));
  return b.take();
}

Report reproduce(Case c, const std::filesystem::path& dir) {
  switch (c) {
    case Case::kP5Example: return p5_example(dir);
    case Case::kP13Obstruction: return p13_obstruction();
    case Case::kP23Construction: return p23_construction(dir);
    case Case::kP23Glue: return p23_glue_report(dir);
    case Case::kP23Embeddings: return p23_embeddings(dir);
    case Case::kAppendixMatrix: return appendix_matrix(dir);
    case Case::kPeriodChecks: return period_checks(dir);
  }
  throw Error("unknown case");
}

Report reproduce(Case c) { return reproduce(c, fixture_dir()); }

}  // namespace cyclolat
