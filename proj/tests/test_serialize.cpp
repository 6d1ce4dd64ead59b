#include "doctest.h"
#include "support.hpp"

#include <fstream>

#include "cyclolat/scenarios.hpp"
#include "cyclolat/serialize.hpp"

using namespace cyclolat;
using oracle::rat;

namespace {

std::filesystem::path scratch(const std::string& name, const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "cyclolat-serialize";
  std::filesystem::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p) << contents;
  return p;
}

}  // namespace

TEST_CASE("scalar encoding") {
  CHECK(to_json(rat(-3, 4)) == "-3/4");
  CHECK(to_json(Rational(5)) == "5");
  CHECK(to_json(Integer(-7)) == -7);
  CHECK(to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(json_integer(Json("123456789012345678901234567890")) == Integer("123456789012345678901234567890"));
  CHECK(json_integer(Json(12)) == 12);
  CHECK(json_rational(Json("44/23")) == rat(44, 23));
  CHECK(json_rational(Json(-2)) == -2);
  CHECK(json_rational(Json("6/4")) == rat(3, 2));
  CHECK_THROWS_AS(json_integer(Json("1/2"), "x"), ParseError);
  CHECK_THROWS_AS(json_rational(Json(true), "x"), ParseError);
  std::mt19937 rng(3);
  for (int t = 0; t < 50; ++t) {
    const Rational q = oracle::random_rational(rng, 1000000, 1000);
    CHECK(json_rational(to_json(q)) == q);
  }
}

TEST_CASE("invariants schema") {
  const Json j = invariants_json(compute_invariants(appendix_lattice(fixture_dir())));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"rank", "signature", "det", "even", "orders", "qvalues", "p_elementary"});
  CHECK(j.at("rank") == 22);
  CHECK(j.at("signature") == Json::array({2, 20}));
  CHECK(j.at("det") == 23);
  CHECK(j.at("even") == true);
  CHECK(j.at("qvalues") == Json::array({"44/23"}));
  CHECK(j.at("p_elementary").at("p") == 23);
  CHECK(j.at("p_elementary").at("a") == 1);
  const Json odd = invariants_json(compute_invariants(lattice_from_expression("<1> + <-1>")));
  CHECK(odd.at("qvalues").is_null());
  const Json mixed = invariants_json(compute_invariants(lattice_from_expression("<6> + U")));
  CHECK(mixed.at("p_elementary").is_null());
  const Json uni = invariants_json(compute_invariants(hyperbolic_plane()));
  CHECK(uni.at("p_elementary").at("p").is_null());
}

TEST_CASE("lattice files round trip") {
  const Lattice s = appendix_lattice(fixture_dir());
  CHECK(s.label().rfind("S = ", 0) == 0);
  const auto p = scratch("s.mat", format_lattice(s));
  const Lattice back = load_lattice(p);
  CHECK(back.gram() == s.gram());
  CHECK(back.label() == s.label());
  CHECK_THROWS_AS(load_lattice(p.parent_path() / "absent.mat"), ParseError);
  CHECK_THROWS_AS(load_lattice(scratch("bad.mat", "2 2\n1 2\n3 4\n")), Error);
}

TEST_CASE("units files") {
  const Json inline_units = {{"p", 5}, {"rank", 1}, {"provenance", "t"}, {"units", {"0,1"}}};
  CHECK(units_from_json(inline_units).units.front() == RealElem::mu(5));
  Json bad = inline_units;
  bad["units"] = {"0,2"};
  CHECK_THROWS_AS(units_from_json(bad), NotAUnitError);
  bad = inline_units;
  bad["rank"] = 3;
  CHECK_THROWS_AS(units_from_json(bad), Error);
  bad = inline_units;
  bad.erase("units");
  CHECK_THROWS_AS(units_from_json(bad), ParseError);
  CHECK_THROWS_AS(load_units(scratch("u.json", "{not json")), ParseError);
}

TEST_CASE("search spec files") {
  const SearchSpec s = load_search_spec(fixture_dir() / "specs/p23_search.json");
  CHECK(s.p == 23);
  CHECK(s.units.units.size() == 10);
  CHECK(s.box.size() == 10);
  CHECK(s.signs == std::vector<int>{1});
  CHECK(s.target.signature == Signature{2, 20});
  CHECK(s.target.qvalues == std::vector<Rational>{rat(44, 23)});
  CHECK(!s.box_note.empty());
  const Json inline_spec = {{"p", 5},
                            {"alpha0", "4/5,3/5"},
                            {"units", {{"p", 5}, {"units", {"0,1"}}}},
                            {"target", {{"signature", {2, 2}}, {"orders", {5}}, {"qvalues", {"2/5"}}}}};
  const SearchSpec d = load_search_spec(scratch("spec.json", inline_spec.dump()));
  REQUIRE(d.box.size() == 1);
  CHECK(d.box[0].lo == 0);
  CHECK(d.box[0].hi == 2);
  CHECK(d.signs == std::vector<int>{1, -1});
  Json broken = inline_spec;
  broken.erase("target");
  CHECK_THROWS_AS(load_search_spec(scratch("spec2.json", broken.dump())), ParseError);
  broken = inline_spec;
  broken["units"] = "nowhere/units.json";
  CHECK_THROWS_AS(load_search_spec(scratch("spec3.json", broken.dump())), ParseError);
}

TEST_CASE("search output") {
  const SearchSpec s = load_search_spec(fixture_dir() / "specs/p5_search.json");
  const Json j = search_json(s, search(s, 1));
  CHECK(j.at("p") == 5);
  CHECK(j.at("solutions").size() == 1);
  const Json& sol = j.at("solutions")[0];
  CHECK(sol.at("sign") == 1);
  CHECK(sol.at("exponents") == Json::array({0}));
  CHECK(j.at("stats").at("candidates") == 1);
  CHECK(j.dump() == search_json(s, search(s, 2)).dump());
}

TEST_CASE("ideal spec files") {
  const auto p = scratch("ideal.json", R"({"p": 5, "alpha": "4/5,3/5"})");
  const IdealLatticeSpec s = load_ideal_spec(p);
  CHECK(s.beta == CycElem::one(5));
  CHECK(to_integer(ideal_gram(s)) == IntMatrix{{2, 1, -2, -2}, {1, 2, 1, -2}, {-2, 1, 2, 1}, {-2, -2, 1, 2}});
  const Json props = properties_json(check_properties(s, ideal_gram(s)));
  CHECK(props.at("integral") == true);
  CHECK_THROWS_AS(load_ideal_spec(scratch("ideal2.json", R"({"p": 5})")), ParseError);
}
