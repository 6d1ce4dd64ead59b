#include "cyclolat/unit_search.hpp"

#include <algorithm>
#include <limits>
#include <thread>

#include "cyclolat/ideal_lattice.hpp"

namespace cyclolat {

UnitSystem make_unit_system(int p, const std::vector<std::string>& units, std::string provenance,
                            std::optional<int> declared_rank) {
  if (!is_odd_prime(p)) throw Error("unit system: " + std::to_string(p) + " is not an odd prime");
  UnitSystem system{p, {}, std::move(provenance)};
  for (std::size_t i = 0; i < units.size(); ++i) {
    RealElem u = parse_real_elem(p, units[i]);
    Rational n = norm_F(u);
    if (abs(n) != 1)
      throw NotAUnitError("unit " + std::to_string(i + 1) + " has norm " + to_string(n) + ", not +-1", i);
    system.units.push_back(std::move(u));
  }
  if (declared_rank && *declared_rank != static_cast<int>(system.units.size()))
    throw Error("unit system declares rank " + std::to_string(*declared_rank) + " but lists " +
                std::to_string(system.units.size()) + " units");
  return system;
}

void SearchSpec::validate() const {
  if (!is_odd_prime(p)) throw Error("search: " + std::to_string(p) + " is not an odd prime");
  if (alpha0.prime() != p || units.p != p) throw Error("search: alpha0 and units must live over p=" + std::to_string(p));
  if (alpha0.is_zero()) throw Error("search: alpha0 must be nonzero");
  if (box.size() != units.units.size())
    throw Error("search: box has " + std::to_string(box.size()) + " ranges for " + std::to_string(units.units.size()) + " units");
  for (const auto& r : box)
    if (r.size() == 0) throw Error("search: empty exponent range");
  if (signs.empty()) throw Error("search: no signs selected");
  for (int s : signs)
    if (s != 1 && s != -1) throw Error("search: signs must be +1 or -1");
  if (target.signature.positive + target.signature.negative != p - 1)
    throw Error("search: target signature must have rank p-1");
  if (target.orders.size() != target.qvalues.size()) throw Error("search: target orders and q-values differ in length");
}

RealElem twist(const SearchSpec& spec, int sign, const std::vector<long>& exponents) {
  RealElem a = spec.alpha0 * Rational(sign);
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) a *= power(spec.units.units[i], exponents[i]);
  return a;
}

namespace {

struct Prepared {
  std::vector<int> signs;
  std::vector<int> alpha0_signs;
  std::vector<std::vector<int>> unit_signs;
  std::vector<std::vector<RealElem>> powers;  // powers[i][e - lo]
  std::vector<Rational> target_multiset;
  Integer target_det;
  Rational norm_sq_times_disc;  // N_F(alpha0)^2 * p^(p-2)
  unsigned long long per_sign = 1;
  unsigned long long total = 0;
};

struct ChunkResult {
  std::vector<SearchSolution> solutions;
  SearchStats stats;
};

void decode(const SearchSpec& spec, const Prepared& prep, unsigned long long idx, int& sign, std::vector<long>& exps) {
  sign = prep.signs[idx / prep.per_sign];
  unsigned long long rest = idx % prep.per_sign;
  for (std::size_t i = spec.box.size(); i-- > 0;) {
    const auto size = spec.box[i].size();
    exps[i] = spec.box[i].lo + static_cast<long>(rest % size);
    rest /= size;
  }
}

ChunkResult run_chunk(const SearchSpec& spec, const Prepared& prep, unsigned long long begin, unsigned long long end) {
  ChunkResult out;
  const std::size_t m = prep.alpha0_signs.size();
  std::vector<long> exps(spec.box.size());
  for (unsigned long long idx = begin; idx < end; ++idx) {
    int sign = 1;
    decode(spec, prep, idx, sign, exps);
    ++out.stats.candidates;

    // (i) embedding signs are multiplicative, so they follow from the
    // certified signs of alpha0 and of each unit.
    int negatives = 0;
    for (std::size_t k = 0; k < m; ++k) {
      int s = sign * prep.alpha0_signs[k];
      for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] % 2 != 0) s *= prep.unit_signs[i][k];
      if (s < 0) ++negatives;
    }
    if (2 * negatives != spec.target.signature.negative) continue;
    ++out.stats.passed_signs;

    // (ii) integrality of the trace form.
    RealElem alpha = spec.alpha0 * Rational(sign);
    for (std::size_t i = 0; i < exps.size(); ++i)
      if (exps[i] != 0) alpha *= prep.powers[i][static_cast<std::size_t>(exps[i] - spec.box[i].lo)];
    RatMatrix gram = ideal_gram(IdealLatticeSpec::unit_ideal(alpha));
    if (!is_integral(gram)) continue;
    ++out.stats.passed_integral;

    // (iii) exact determinant identity and the target discriminant.
    IntMatrix igram = to_integer(gram);
    Integer d = det(igram);
    Rational nf = norm_F(alpha);
    Rational expected = nf * nf * Rational(trace_form_discriminant(spec.p));
    if (Rational(abs(d)) != expected || abs(d) != prep.target_det) continue;
    ++out.stats.passed_det;

    // (iv) discriminant form and signature.
    Lattice lattice(igram);
    if (!lattice.is_even()) continue;
    DiscForm form = discriminant_form(lattice);
    if (form.orders != spec.target.orders || form.value_multiset() != prep.target_multiset) continue;
    Signature sig = signature(lattice);
    if (!(sig == spec.target.signature)) continue;
    ++out.stats.passed_form;

    out.solutions.push_back({sign, exps, std::move(alpha), std::move(igram), sig, d, form.orders, form.qvalues});
  }
  return out;
}

}  // namespace

SearchResult search(const SearchSpec& spec, unsigned jobs) {
  spec.validate();
  Prepared prep;
  prep.signs = spec.signs;
  std::sort(prep.signs.begin(), prep.signs.end(), std::greater<>());
  prep.signs.erase(std::unique(prep.signs.begin(), prep.signs.end()), prep.signs.end());
  prep.alpha0_signs = embedding_signs(spec.alpha0);
  for (std::size_t i = 0; i < spec.units.units.size(); ++i) {
    const RealElem& u = spec.units.units[i];
    prep.unit_signs.push_back(embedding_signs(u));
    std::vector<RealElem> pw;
    for (long e = spec.box[i].lo; e <= spec.box[i].hi; ++e) pw.push_back(power(u, e));
    prep.powers.push_back(std::move(pw));
    const auto size = spec.box[i].size();
    if (prep.per_sign > std::numeric_limits<unsigned long long>::max() / size) throw Error("search: box too large");
    prep.per_sign *= size;
  }
  prep.total = prep.per_sign * prep.signs.size();
  prep.target_det = 1;
  for (const auto& d : spec.target.orders) prep.target_det *= d;
  prep.target_multiset = form_value_multiset(spec.target.orders, spec.target.qvalues, RatMatrix());

  jobs = std::max(1u, jobs);
  const unsigned long long chunk = (prep.total + jobs - 1) / jobs;
  std::vector<ChunkResult> results(jobs);
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    const unsigned long long begin = std::min(prep.total, chunk * w);
    const unsigned long long end = std::min(prep.total, begin + chunk);
    workers.emplace_back([&, w, begin, end] { results[w] = run_chunk(spec, prep, begin, end); });
  }
  for (auto& t : workers) t.join();

  SearchResult merged;
  for (auto& r : results) {
    merged.stats.candidates += r.stats.candidates;
    merged.stats.passed_signs += r.stats.passed_signs;
    merged.stats.passed_integral += r.stats.passed_integral;
    merged.stats.passed_det += r.stats.passed_det;
    merged.stats.passed_form += r.stats.passed_form;
    for (auto& s : r.solutions) merged.solutions.push_back(std::move(s));
  }
  return merged;
}

}  // namespace cyclolat
