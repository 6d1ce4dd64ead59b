#include "cyclolat/serialize.hpp"

#include <fstream>
#include <sstream>

namespace cyclolat {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Integer& z) {
  if (fits_int64(z)) return static_cast<std::int64_t>(z.get_si());
  return to_string(z);
}

Json to_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

Json to_json(const std::vector<Integer>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

Json to_json(const std::vector<Rational>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(to_json(v));
  return a;
}

Json to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json invariants_json(const Invariants& inv) {
  Json j;
  j["rank"] = inv.rank;
  j["signature"] = to_json(inv.signature);
  j["det"] = to_json(inv.det);
  j["even"] = inv.even;
  j["orders"] = to_json(inv.orders);
  j["qvalues"] = inv.qvalues ? to_json(*inv.qvalues) : Json(nullptr);
  if (inv.p_elementary) {
    j["p_elementary"] = {{"p", inv.elementary_prime ? Json(*inv.elementary_prime) : Json(nullptr)},
                         {"a", inv.elementary_length}};
  } else {
    j["p_elementary"] = nullptr;
  }
  return j;
}

Json isometry_json(const IsometryReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["preserves_form"] = r.preserves_form;
  j["order"] = r.claimed_order;
  j["order_exact"] = r.order_exact;
  j["char_poly"] = to_json(r.char_poly);
  j["discriminant_action"] = r.discriminant_action_trivial ? "trivial" : "nontrivial";
  j["discriminant_multiplier"] = r.discriminant_multiplier ? to_json(*r.discriminant_multiplier) : Json(nullptr);
  return j;
}

Json properties_json(const IdealLatticeReport& r) {
  Json j;
  j["integral"] = r.integral;
  j["even"] = r.even;
  j["det"] = to_json(r.det);
  j["expected_det"] = to_json(r.expected_det);
  j["disc_identity"] = r.disc_identity;
  j["negative_embeddings"] = r.negative_embeddings;
  j["signature_from_embeddings"] = to_json(r.from_embeddings);
  j["signature_from_diagonalization"] = to_json(r.from_diagonalization);
  j["signature_agrees"] = r.signature_agrees;
  return j;
}

Json obstruction_json(const ObstructionResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["rhs"] = to_json(r.rhs);
  j["witness_prime"] = r.witness_prime ? to_json(*r.witness_prime) : Json(nullptr);
  j["witness_exponent"] = r.witness_prime ? Json(r.witness_exponent) : Json(nullptr);
  return j;
}

Json solution_json(const SearchSolution& s) {
  Json j;
  j["sign"] = s.sign;
  j["exponents"] = s.exponents;
  j["alpha"] = format_elem(s.alpha);
  j["signature"] = to_json(s.signature);
  j["det"] = to_json(s.det);
  j["orders"] = to_json(s.orders);
  j["qvalues"] = to_json(s.qvalues);
  return j;
}

Json search_json(const SearchSpec& spec, const SearchResult& result) {
  Json j;
  j["p"] = spec.p;
  j["alpha0"] = format_elem(spec.alpha0);
  Json box = Json::array();
  for (const auto& r : spec.box) box.push_back({r.lo, r.hi});
  j["box"] = box;
  j["box_note"] = spec.box_note;
  j["signs"] = spec.signs;
  j["stats"] = {{"candidates", result.stats.candidates},
                {"passed_signs", result.stats.passed_signs},
                {"passed_integral", result.stats.passed_integral},
                {"passed_det", result.stats.passed_det},
                {"passed_form", result.stats.passed_form}};
  Json sols = Json::array();
  for (const auto& s : result.solutions) sols.push_back(solution_json(s));
  j["solutions"] = sols;
  return j;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Lattice load_lattice(const std::filesystem::path& path) {
  const std::string text = read_file(path);
  std::string label;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    const auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    if (line[pos] != '#') break;
    label = line.substr(pos + 1);
    const auto start = label.find_first_not_of(' ');
    label = start == std::string::npos ? std::string() : label.substr(start);
    while (!label.empty() && (label.back() == '\r' || label.back() == ' ')) label.pop_back();
    break;
  }
  return Lattice(parse_int_matrix(text), label);
}

std::string format_lattice(const Lattice& l) {
  std::string out;
  if (!l.label().empty()) out += "# " + l.label() + "\n";
  return out + format_matrix(l.gram());
}

namespace {

template <class T>
T get_field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(where + ": bad field '" + std::string(key) + "': " + e.what());
  }
}

Json parse_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

Integer json_integer(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Integer(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) {
    Rational q = parse_rational(v.get<std::string>());
    if (!is_integer(q)) throw ParseError(where + ": expected an integer");
    return q.get_num();
  }
  throw ParseError(where + ": expected an integer");
}

Rational json_rational(const Json& v, const std::string& where) {
  if (v.is_number_integer()) return Rational(json_integer(v, where));
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw ParseError(where + ": expected a rational string");
}

UnitSystem units_from_json(const Json& j) {
  const std::string where = "units";
  const int p = get_field<int>(j, "p", where);
  const auto units = get_field<std::vector<std::string>>(j, "units", where);
  std::optional<int> rank;
  if (j.contains("rank")) rank = get_field<int>(j, "rank", where);
  std::string provenance = j.contains("provenance") ? get_field<std::string>(j, "provenance", where) : "";
  return make_unit_system(p, units, std::move(provenance), rank);
}

UnitSystem load_units(const std::filesystem::path& path) { return units_from_json(parse_json_file(path)); }

SearchSpec load_search_spec(const std::filesystem::path& path) {
  const Json j = parse_json_file(path);
  const std::string where = path.string();
  SearchSpec s;
  s.p = get_field<int>(j, "p", where);
  s.alpha0 = parse_real_elem(s.p, get_field<std::string>(j, "alpha0", where));
  if (!j.contains("units")) throw ParseError(where + ": missing field 'units'");
  if (j["units"].is_string()) {
    std::filesystem::path up = j["units"].get<std::string>();
    if (up.is_relative()) up = path.parent_path().parent_path() / up;
    if (!std::filesystem::exists(up)) up = path.parent_path() / j["units"].get<std::string>();
    s.units = load_units(up);
  } else {
    s.units = units_from_json(j["units"]);
  }
  if (j.contains("box")) {
    for (const auto& r : j["box"]) {
      if (!r.is_array() || r.size() != 2) throw ParseError(where + ": box entries must be [lo, hi]");
      s.box.push_back({r[0].get<long>(), r[1].get<long>()});
    }
  } else {
    s.box.assign(s.units.units.size(), {0, 2});
  }
  s.signs = j.contains("signs") ? get_field<std::vector<int>>(j, "signs", where) : std::vector<int>{1, -1};
  if (j.contains("box_note")) s.box_note = get_field<std::string>(j, "box_note", where);
  const Json& t = j.contains("target") ? j["target"] : throw ParseError(where + ": missing field 'target'");
  const auto sig = get_field<std::vector<int>>(t, "signature", where + " target");
  if (sig.size() != 2) throw ParseError(where + ": target signature must be [s+, s-]");
  s.target.signature = {sig[0], sig[1]};
  for (const auto& v : t.value("orders", Json::array())) s.target.orders.push_back(json_integer(v, where));
  for (const auto& v : t.value("qvalues", Json::array())) s.target.qvalues.push_back(json_rational(v, where));
  s.validate();
  return s;
}

IdealLatticeSpec load_ideal_spec(const std::filesystem::path& path) {
  const Json j = parse_json_file(path);
  const std::string where = path.string();
  IdealLatticeSpec s;
  s.p = get_field<int>(j, "p", where);
  s.alpha = parse_real_elem(s.p, get_field<std::string>(j, "alpha", where));
  s.beta = j.contains("beta") ? parse_cyc_elem(s.p, get_field<std::string>(j, "beta", where)) : CycElem::one(s.p);
  s.validate();
  return s;
}

}  // namespace cyclolat
