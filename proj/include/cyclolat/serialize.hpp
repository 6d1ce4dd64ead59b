#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"

#include "cyclolat/ideal_lattice.hpp"
#include "cyclolat/lattice.hpp"
#include "cyclolat/unit_search.hpp"

namespace cyclolat {

using Json = nlohmann::ordered_json;

/// Rationals are always strings ("a/b"); integers are JSON numbers when they
/// fit in 64 bits and strings otherwise.
Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const Signature& s);
Json to_json(const std::vector<Integer>& values);
Json to_json(const std::vector<Rational>& values);
/// Rows of strings.
Json to_json(const RatMatrix& m);

/// {rank, signature, det, even, orders, qvalues, p_elementary: {p, a}}.
/// qvalues is null for odd lattices; p_elementary is null when the lattice is
/// not p-elementary for any p (p is null for unimodular lattices).
Json invariants_json(const Invariants& inv);
Json isometry_json(const IsometryReport& r);
Json properties_json(const IdealLatticeReport& r);
Json obstruction_json(const ObstructionResult& r);
Json solution_json(const SearchSolution& s);
/// Solutions array plus the spec's box, signs, box note and filter counts.
Json search_json(const SearchSpec& spec, const SearchResult& result);

/// Integers may be JSON numbers or strings; rationals may be integers or
/// "a/b" strings. Throws ParseError mentioning `where`.
Integer json_integer(const Json& v, const std::string& where = "json");
Rational json_rational(const Json& v, const std::string& where = "json");

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Matrix text format preceded by optional '#' lines; the first '#' line
/// (without the marker) becomes the label.
Lattice load_lattice(const std::filesystem::path& path);
std::string format_lattice(const Lattice& l);

/// {"p": 23, "rank": 10, "provenance": "...", "units": ["2,0,-4,0,1", ...]}.
UnitSystem load_units(const std::filesystem::path& path);
UnitSystem units_from_json(const Json& j);

/// {"p", "alpha0", "units" (path relative to the spec file, or an inline
/// units object), "box": [[lo, hi], ...], "signs", "box_note",
/// "target": {"signature": [s+, s-], "orders", "qvalues"}}.
SearchSpec load_search_spec(const std::filesystem::path& path);

/// {"p", "beta" (optional, power basis), "alpha" (mu basis)}.
IdealLatticeSpec load_ideal_spec(const std::filesystem::path& path);

}  // namespace cyclolat
