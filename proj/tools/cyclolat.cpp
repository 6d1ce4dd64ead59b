#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"

#include "cyclolat/ideal_lattice.hpp"
#include "cyclolat/scenarios.hpp"
#include "cyclolat/serialize.hpp"

using namespace cyclolat;
namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::string lattice;
  std::string expr;
  std::string spec;
  std::string out;
  bool json = false;
};

// Relative lattice paths that do not exist are looked up in the fixtures
// directory, first as given and then under matrices/.
fs::path resolve_lattice_path(const std::string& arg) {
  fs::path p = arg;
  if (fs::exists(p) || p.is_absolute()) return p;
  const fs::path dir = fixture_dir();
  if (fs::exists(dir / p)) return dir / p;
  if (fs::exists(dir / "matrices" / p.filename())) return dir / "matrices" / p.filename();
  return p;
}

Lattice input_lattice(const Options& o) {
  if (!o.lattice.empty() && !o.expr.empty()) throw ParseError("give either --lattice or --expr, not both");
  if (!o.expr.empty()) return lattice_from_expression(o.expr).relabeled(o.expr);
  if (o.lattice.empty()) throw ParseError("--lattice FILE or --expr EXPRESSION is required");
  return load_lattice(resolve_lattice_path(o.lattice));
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw ParseError("cannot write " + o.out);
  f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string signature_text(const Signature& s) {
  return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

template <class T>
std::string list_text(const std::vector<T>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return "[" + out + "]";
}

std::string invariants_text(const Invariants& inv) {
  std::string s;
  s += "rank: " + std::to_string(inv.rank) + "\n";
  s += "signature: " + signature_text(inv.signature) + "\n";
  s += "det: " + to_string(inv.det) + "\n";
  s += std::string("even: ") + (inv.even ? "true" : "false") + "\n";
  s += "orders: " + list_text(inv.orders) + "\n";
  s += "q: " + (inv.qvalues ? list_text(*inv.qvalues) : std::string("undefined (odd lattice)")) + "\n";
  if (inv.p_elementary)
    s += "p-elementary: " + (inv.elementary_prime ? std::to_string(*inv.elementary_prime) : std::string("unimodular")) +
         ", a = " + std::to_string(inv.elementary_length) + "\n";
  return s;
}

int cmd_gram(const Options& o, int p, const std::string& alpha, const std::string& beta) {
  IdealLatticeSpec spec;
  if (!o.spec.empty()) {
    spec = load_ideal_spec(o.spec);
  } else {
    if (p == 0 || alpha.empty()) throw ParseError("gram needs --spec FILE or --p P --alpha COEFFS");
    spec.p = p;
    spec.alpha = parse_real_elem(p, alpha);
    spec.beta = beta.empty() ? CycElem::one(p) : parse_cyc_elem(p, beta);
    spec.validate();
  }
  const RatMatrix g = ideal_gram(spec);
  const auto props = check_properties(spec, g);
  if (o.json) {
    Json j;
    j["p"] = spec.p;
    j["alpha"] = format_elem(spec.alpha);
    j["beta"] = format_elem(spec.beta);
    j["gram"] = props.integral ? format_matrix(to_integer(g)) : format_matrix(g);
    j["properties"] = properties_json(props);
    emit(o, dump(j));
  } else {
    emit(o, props.integral ? format_matrix(to_integer(g)) : format_matrix(g));
    if (!o.out.empty()) {
      std::cout << "integral: " << (props.integral ? "true" : "false") << "\n";
      std::cout << "signature: " << signature_text(props.from_diagonalization) << "\n";
      std::cout << "det: " << to_string(props.det) << "\n";
    }
  }
  return kOk;
}

int cmd_invariants(const Options& o) {
  const Lattice l = input_lattice(o);
  const Invariants inv = compute_invariants(l);
  emit(o, o.json ? dump(invariants_json(inv)) : invariants_text(inv));
  return kOk;
}

int cmd_verify(const Options& o, int companion, const std::string& matrix, unsigned long order) {
  const Lattice l = input_lattice(o);
  IntMatrix c;
  if (companion != 0) {
    if (!matrix.empty()) throw ParseError("give either --companion or --matrix");
    c = cyclotomic_companion(companion);
    if (order == 0) order = static_cast<unsigned long>(companion);
  } else {
    if (matrix.empty() || order == 0) throw ParseError("verify needs --companion P or --matrix FILE --order N");
    c = parse_int_matrix(read_file(matrix));
  }
  if (c.rows() != l.rank() || c.cols() != l.rank())
    throw ParseError("isometry is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + " but the lattice has rank " +
                     std::to_string(l.rank()));
  const IsometryReport r = verify_isometry(l, c, order);
  if (o.json) {
    emit(o, dump(isometry_json(r)));
  } else {
    std::string s;
    s += std::string("result: ") + (r.passed() ? "pass" : "FAIL") + "\n";
    s += std::string("preserves form: ") + (r.preserves_form ? "true" : "false") + "\n";
    s += "order " + std::to_string(order) + ": " + (r.order_exact ? "exact" : "not exact") + "\n";
    s += "characteristic polynomial: " + list_text(r.char_poly) + "\n";
    s += std::string("discriminant action: ") + (r.discriminant_action_trivial ? "trivial" : "nontrivial");
    if (r.discriminant_multiplier) s += " (multiplier " + to_string(*r.discriminant_multiplier) + ")";
    s += "\n";
    emit(o, s);
  }
  return r.passed() ? kOk : kFailed;
}

IntMatrix parse_columns(const std::vector<std::string>& vectors, std::size_t rank) {
  IntMatrix sub(rank, vectors.size());
  for (std::size_t c = 0; c < vectors.size(); ++c) {
    const auto v = parse_rational_list(vectors[c]);
    if (v.size() != rank)
      throw ParseError("vector " + std::to_string(c + 1) + " has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(rank));
    for (std::size_t i = 0; i < rank; ++i) {
      if (!is_integer(v[i])) throw ParseError("sublattice vectors must be integral");
      sub(i, c) = v[i].get_num();
    }
  }
  return sub;
}

int cmd_complement(const Options& o, const std::vector<std::string>& vectors, bool show_gram) {
  const Lattice l = input_lattice(o);
  if (vectors.empty()) throw ParseError("complement needs at least one --vector");
  const IntMatrix sub = parse_columns(vectors, l.rank());
  const IntMatrix basis = complement_basis(l, sub);
  const Lattice c(basis.transpose() * l.gram() * basis, "complement");
  const Invariants inv = compute_invariants(c);
  if (o.json) {
    Json j;
    j["basis"] = format_matrix(basis);
    j["gram"] = format_matrix(c.gram());
    j["invariants"] = invariants_json(inv);
    emit(o, dump(j));
  } else {
    emit(o, (show_gram ? format_matrix(c.gram()) : std::string()) + invariants_text(inv));
  }
  return kOk;
}

int cmd_glue(const Options& o, const std::string& first, const std::string& second, const std::vector<std::string>& glue) {
  if (first.empty() || second.empty()) throw ParseError("glue needs --first and --second");
  auto load = [](const std::string& arg) {
    if (fs::exists(resolve_lattice_path(arg))) return load_lattice(resolve_lattice_path(arg));
    return lattice_from_expression(arg).relabeled(arg);
  };
  GlueSpec spec{load(first), load(second), {}};
  for (const auto& g : glue) {
    auto v = parse_rational_list(g);
    if (v.size() != spec.first.rank() + spec.second.rank())
      throw ParseError("glue vector has " + std::to_string(v.size()) + " entries, expected " +
                       std::to_string(spec.first.rank() + spec.second.rank()));
    spec.glue_vectors.push_back(std::move(v));
  }
  const Overlattice m = overlattice(spec);
  const Invariants inv = compute_invariants(m.lattice);
  if (o.json) {
    Json j;
    j["index"] = to_json(m.index);
    j["gram"] = format_matrix(m.lattice.gram());
    j["invariants"] = invariants_json(inv);
    emit(o, dump(j));
  } else {
    emit(o, "index: " + to_string(m.index) + "\n" + invariants_text(inv));
  }
  return kOk;
}

int cmd_search(const Options& o, unsigned jobs, const std::string& gram_dir) {
  if (o.spec.empty()) throw ParseError("search needs --spec FILE");
  const SearchSpec spec = load_search_spec(o.spec);
  const SearchResult r = search(spec, jobs);
  if (!gram_dir.empty()) {
    fs::create_directories(gram_dir);
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
      std::ofstream f(fs::path(gram_dir) / ("solution_" + std::to_string(i + 1) + ".mat"), std::ios::binary);
      f << "# sign " << r.solutions[i].sign << " exponents";
      for (long e : r.solutions[i].exponents) f << " " << e;
      f << "\n" << format_matrix(r.solutions[i].gram);
    }
  }
  if (o.json || !o.out.empty()) {
    emit(o, dump(search_json(spec, r)));
  }
  if (!o.json) {
    std::cout << "candidates: " << r.stats.candidates << "\n";
    std::cout << "after signs: " << r.stats.passed_signs << "\n";
    std::cout << "after integrality: " << r.stats.passed_integral << "\n";
    std::cout << "after determinant: " << r.stats.passed_det << "\n";
    std::cout << "solutions: " << r.stats.passed_form << "\n";
    if (o.out.empty())
      for (const auto& s : r.solutions) {
        std::cout << (s.sign > 0 ? "+1" : "-1") << " (";
        for (std::size_t i = 0; i < s.exponents.size(); ++i) std::cout << (i ? "," : "") << s.exponents[i];
        std::cout << ")\n";
      }
  }
  return kOk;
}

int cmd_reproduce(const Options& o, const std::string& name) {
  std::vector<Case> cases;
  if (name == "ALL") {
    cases = all_cases();
  } else {
    cases.push_back(parse_case(name));
  }
  std::vector<Report> reports;
  for (Case c : cases) reports.push_back(reproduce(c));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.passed();
  if (o.json || !o.out.empty()) {
    Json j;
    if (reports.size() == 1) {
      j = reports.front().to_json();
    } else {
      j = Json::array();
      for (const auto& r : reports) j.push_back(r.to_json());
    }
    emit(o, dump(j));
  }
  if (!o.json)
    for (const auto& r : reports) std::cout << r.to_text();
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ideal lattices in cyclotomic fields and lattice invariants"};
  app.require_subcommand(1);
  Options o;
  auto common = [&o](CLI::App* sub, bool lattice) {
    if (lattice) {
      sub->add_option("--lattice", o.lattice, "Lattice file (matrix text format)");
      sub->add_option("--expr", o.expr, "Direct sum expression such as \"E8^2 + U^3 + <-2>\"");
    }
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_option("--out", o.out, "Write the main output to FILE");
  };

  int p = 0;
  std::string alpha, beta;
  auto* gram = app.add_subcommand("gram", "Gram matrix of an ideal lattice");
  common(gram, false);
  gram->add_option("--spec", o.spec, "Ideal lattice spec (JSON)");
  gram->add_option("--p", p, "Prime");
  gram->add_option("--alpha", alpha, "alpha in the mu basis, comma-separated rationals");
  gram->add_option("--beta", beta, "beta in the power basis (default 1)");

  auto* invariants = app.add_subcommand("invariants", "Rank, signature, determinant and discriminant form");
  common(invariants, true);

  int companion = 0;
  std::string matrix;
  unsigned long order = 0;
  auto* verify = app.add_subcommand("verify", "Check an isometry of a lattice");
  common(verify, true);
  verify->add_option("--companion", companion, "Use the companion matrix of Phi_P");
  verify->add_option("--matrix", matrix, "Isometry matrix file");
  verify->add_option("--order", order, "Claimed order");

  std::vector<std::string> vectors;
  bool show_gram = false;
  auto* complement = app.add_subcommand("complement", "Orthogonal complement of a primitive sublattice");
  common(complement, true);
  complement->add_option("--vector", vectors, "Sublattice generator, comma-separated coordinates (repeatable)");
  complement->add_flag("--gram", show_gram, "Print the complement Gram matrix");

  std::string first, second;
  std::vector<std::string> glue;
  auto* gluecmd = app.add_subcommand("glue", "Even overlattice of a direct sum");
  common(gluecmd, false);
  gluecmd->add_option("--first", first, "First summand (file or expression)");
  gluecmd->add_option("--second", second, "Second summand (file or expression)");
  gluecmd->add_option("--glue", glue, "Glue vector in direct-sum coordinates (repeatable)");

  unsigned jobs = 1;
  std::string gram_dir;
  auto* searchcmd = app.add_subcommand("search", "Search unit twists of alpha0");
  common(searchcmd, false);
  searchcmd->add_option("--spec", o.spec, "Search spec (JSON)");
  searchcmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  searchcmd->add_option("--gram-dir", gram_dir, "Write one Gram matrix file per solution");

  std::string case_name;
  auto* reproducecmd = app.add_subcommand("reproduce", "Reproduce a reference computation");
  common(reproducecmd, false);
  reproducecmd->add_option("--case", case_name, "Case name or ALL")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gram) return cmd_gram(o, p, alpha, beta);
    if (*invariants) return cmd_invariants(o);
    if (*verify) return cmd_verify(o, companion, matrix, order);
    if (*complement) return cmd_complement(o, vectors, show_gram);
    if (*gluecmd) return cmd_glue(o, first, second, glue);
    if (*searchcmd) return cmd_search(o, jobs, gram_dir);
    if (*reproducecmd) return cmd_reproduce(o, case_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
