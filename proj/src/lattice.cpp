#include "cyclolat/lattice.hpp"
#include "cyclolat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace cyclolat {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long parse_long(std::string_view s, std::string_view context) {
  s = trim_view(s);
  Rational q;
  try {
    q = parse_rational(s);
  } catch (const ParseError&) {
    throw ParseError("invalid integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  if (!is_integer(q) || !q.get_num().fits_slong_p() || s.find('/') != std::string_view::npos)
    throw ParseError("invalid integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return q.get_num().get_si();
}

std::vector<Rational> reduce_mod_one(std::vector<Rational> v) {
  for (auto& x : v) x = mod_positive(x, 1);
  return v;
}

std::vector<Rational> scaled(const std::vector<Rational>& v, const Integer& k) {
  std::vector<Rational> out(v);
  for (auto& x : out) x *= k;
  return out;
}

bool integral_vector(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

std::vector<Rational> gram_times(const IntMatrix& g, const std::vector<Rational>& x) {
  std::vector<Rational> out(g.rows(), Rational(0));
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0) out[i] += Rational(g(i, j)) * x[j];
  return out;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rational> apply(const IntMatrix& c, const std::vector<Rational>& x) {
  std::vector<Rational> out(c.rows(), Rational(0));
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) != 0) out[i] += Rational(c(i, j)) * x[j];
  return out;
}

// Representative of q in (-1, 1].
Rational symmetric_rep(const Rational& q) {
  Rational r = mod_positive(q, 2);
  if (r > 1) r -= 2;
  return r;
}

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> out;
  for (unsigned long d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Lattice

Lattice::Lattice(IntMatrix gram, std::string label) : gram_(std::move(gram)), label_(std::move(label)) {
  if (!gram_.square()) throw Error("Gram matrix is not square");
  if (!gram_.symmetric()) throw Error("Gram matrix is not symmetric");
  det_ = cyclolat::det(gram_);
  if (det_ == 0) throw DegenerateLatticeError("degenerate form: Gram determinant is 0" + (label_.empty() ? std::string() : " (" + label_ + ")"));
}

bool Lattice::is_even() const {
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) return false;
  return true;
}

Lattice hyperbolic_plane() { return Lattice(IntMatrix{{0, 1}, {1, 0}}, "U"); }

Lattice e8() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = -2;
  const std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (auto [a, b] : edges) g(a, b) = g(b, a) = 1;
  return Lattice(std::move(g), "E8");
}

Lattice a_n(int n) {
  if (n < 1) throw Error("A_n needs n >= 1");
  IntMatrix g(n, n);
  for (int i = 0; i < n; ++i) {
    g(i, i) = -2;
    if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = 1;
  }
  return Lattice(std::move(g), "A" + std::to_string(n));
}

Lattice k23() { return Lattice(IntMatrix{{-12, 1}, {1, -2}}, "K23"); }
Lattice h5() { return Lattice(IntMatrix{{2, 1}, {1, -2}}, "H5"); }

Lattice diagonal_lattice(const std::vector<long>& entries) {
  IntMatrix g(entries.size(), entries.size());
  std::string label;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    g(i, i) = entries[i];
    label += (i ? "," : "") + std::to_string(entries[i]);
  }
  return Lattice(std::move(g), entries.size() == 1 ? "<" + label + ">" : "diag(" + label + ")");
}

Lattice standard_lattice(std::string_view name) {
  std::string_view n = trim_view(name);
  if (n == "U") return hyperbolic_plane();
  if (n == "E8") return e8();
  if (n == "K23") return k23();
  if (n == "H5") return h5();
  if (n.size() > 1 && n.front() == 'A' && std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    return a_n(static_cast<int>(parse_long(n.substr(1), name)));
  if (n.size() > 2 && n.front() == '<' && n.back() == '>') return diagonal_lattice({parse_long(n.substr(1, n.size() - 2), name)});
  if (n.size() > 6 && n.substr(0, 5) == "diag(" && n.back() == ')') {
    std::vector<long> entries;
    std::string_view body = n.substr(5, n.size() - 6);
    std::size_t start = 0;
    while (true) {
      auto comma = body.find(',', start);
      entries.push_back(parse_long(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start), name));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return diagonal_lattice(entries);
  }
  throw ParseError("unknown lattice name '" + std::string(name) + "'");
}

Lattice lattice_from_expression(std::string_view expr) {
  std::vector<Lattice> parts;
  std::size_t start = 0;
  while (start <= expr.size()) {
    auto plus = expr.find('+', start);
    std::string_view term = trim_view(expr.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
    if (term.empty()) throw ParseError("empty term in lattice expression '" + std::string(expr) + "'");
    long count = 1;
    if (auto caret = term.rfind('^'); caret != std::string_view::npos && term.back() != '>') {
      count = parse_long(term.substr(caret + 1), expr);
      term = trim_view(term.substr(0, caret));
      if (count < 1) throw ParseError("repetition count must be positive in '" + std::string(expr) + "'");
    }
    Lattice base = standard_lattice(term);
    for (long i = 0; i < count; ++i) parts.push_back(base);
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  Lattice sum = direct_sum(parts);
  return sum.relabeled(std::string(trim_view(expr)));
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  return Lattice(block_diagonal(a.gram(), b.gram()), a.label() + "+" + b.label());
}

Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw Error("direct sum of no lattices");
  IntMatrix g = parts.front().gram();
  std::string label = parts.front().label();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    g = block_diagonal(g, parts[i].gram());
    label += "+" + parts[i].label();
  }
  return Lattice(std::move(g), label);
}

Signature signature(const Lattice& l) { return congruent_diag(l.gram()); }

// ---------------------------------------------------------------- discriminant

Integer DiscGroup::order() const {
  Integer n = 1;
  for (const auto& d : orders) n *= d;
  return n;
}

Integer DiscForm::order() const {
  Integer n = 1;
  for (const auto& d : orders) n *= d;
  return n;
}

DiscGroup discriminant_group(const Lattice& l) {
  SNFResult s = snf(l.gram());
  DiscGroup group;
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = s.D(i, i);
    if (d == 1) continue;
    std::vector<Rational> g(n);
    for (std::size_t j = 0; j < n; ++j) g[j] = Rational(s.V(j, i), d);
    for (auto& x : g) x.canonicalize();
    group.orders.push_back(d);
    group.generators.push_back(reduce_mod_one(std::move(g)));
  }
  return group;
}

Rational q_value(const Lattice& l, const std::vector<Rational>& x) {
  return mod_positive(dot(x, gram_times(l.gram(), x)), 2);
}

Rational b_value(const Lattice& l, const std::vector<Rational>& x, const std::vector<Rational>& y) {
  return mod_positive(dot(x, gram_times(l.gram(), y)), 1);
}

DiscForm discriminant_form(const Lattice& l) {
  if (!l.is_even()) throw Error("discriminant quadratic form needs an even lattice" + (l.label().empty() ? std::string() : " (" + l.label() + ")"));
  DiscGroup group = discriminant_group(l);
  DiscForm form;
  form.orders = group.orders;
  form.generators = std::move(group.generators);
  if (form.orders.size() == 1 && form.orders[0] <= 1000000) {
    const Integer& d = form.orders[0];
    const unsigned long dl = d.get_ui();
    const Rational q1 = q_value(l, form.generators[0]);
    unsigned long best_k = 1;
    Rational best = symmetric_rep(q1);
    for (unsigned long k = 2; k < dl; ++k) {
      if (std::gcd(k, dl) != 1) continue;
      Rational cand = symmetric_rep(q1 * Rational(Integer(k) * k));
      Rational ac = abs(cand), ab = abs(best);
      if (ac < ab || (ac == ab && sgn(cand) > 0 && sgn(best) < 0)) {
        best = cand;
        best_k = k;
      }
    }
    if (best_k != 1) form.generators[0] = reduce_mod_one(scaled(form.generators[0], Integer(best_k)));
  }
  const std::size_t k = form.orders.size();
  form.pairings = RatMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    form.qvalues.push_back(q_value(l, form.generators[i]));
    for (std::size_t j = 0; j < k; ++j) form.pairings(i, j) = b_value(l, form.generators[i], form.generators[j]);
  }
  return form;
}

std::vector<Rational> form_value_multiset(const std::vector<Integer>& orders, const std::vector<Rational>& qvalues,
                                          const RatMatrix& pairings) {
  Integer total = 1;
  for (const auto& d : orders) total *= d;
  if (total > (1 << 20)) throw Error("discriminant group too large to enumerate: " + to_string(total));
  const std::size_t k = orders.size();
  std::vector<unsigned long> digits(k, 0);
  std::vector<Rational> values;
  values.reserve(total.get_ui());
  while (true) {
    Rational q = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!digits[i]) continue;
      q += qvalues[i] * Rational(Integer(digits[i]) * digits[i]);
      if (pairings.rows() == k)
        for (std::size_t j = i + 1; j < k; ++j)
          if (digits[j]) q += 2 * pairings(i, j) * Rational(Integer(digits[i]) * digits[j]);
    }
    values.push_back(mod_positive(q, 2));
    std::size_t i = 0;
    while (i < k && ++digits[i] == orders[i].get_ui()) digits[i++] = 0;
    if (i == k) break;
  }
  return sorted(std::move(values));
}

std::vector<Rational> DiscForm::value_multiset() const { return form_value_multiset(orders, qvalues, pairings); }

bool equivalent_forms(const DiscForm& a, const DiscForm& b) {
  return a.orders == b.orders && a.value_multiset() == b.value_multiset();
}

PElementary is_p_elementary(const Lattice& l, long p) {
  PElementary r{true, 0};
  for (const auto& d : snf(l.gram()).diagonal()) {
    if (d == 1) continue;
    if (d == p) {
      ++r.length;
    } else {
      r.flag = false;
    }
  }
  if (!r.flag) r.length = 0;
  return r;
}

// ---------------------------------------------------------------- sublattices

void require_primitive(const IntMatrix& sub) {
  if (sub.cols() > sub.rows()) throw Error("sublattice has more generators than the ambient rank");
  for (const auto& d : snf(sub).diagonal()) {
    if (d == 0) throw Error("sublattice generators are linearly dependent");
    if (d != 1) throw NonPrimitiveError("sublattice is not primitive: invariant factor " + to_string(d), d);
  }
}

IntMatrix saturate(const IntMatrix& sub) {
  IntMatrix normals = int_kernel(sub.transpose());
  return int_kernel(normals.transpose());
}

IntMatrix complement_basis(const Lattice& l, const IntMatrix& sub) {
  if (sub.rows() != l.rank()) throw Error("sublattice coordinates have the wrong length");
  require_primitive(sub);
  return int_kernel(sub.transpose() * l.gram());
}

Lattice orthogonal_complement(const Lattice& l, const IntMatrix& sub) {
  IntMatrix k = complement_basis(l, sub);
  if (k.cols() == 0) throw DegenerateLatticeError("orthogonal complement is zero");
  IntMatrix g = k.transpose() * l.gram() * k;
  if (cyclolat::det(g) == 0)
    throw DegenerateLatticeError("orthogonal complement is degenerate (sublattice is not nondegenerate)");
  return Lattice(std::move(g), "complement");
}

// ---------------------------------------------------------------- gluing

std::vector<Rational> Overlattice::coordinates(const std::vector<Rational>& ambient) const {
  auto c = rational_solve(basis.transpose(), ambient);
  if (!c) throw Error("vector is not in the span of the overlattice");
  return *c;
}

RatMatrix Overlattice::transport(const IntMatrix& ambient_isometry) const {
  RatMatrix bt = basis.transpose();
  return rational_inverse(bt) * to_rational(ambient_isometry) * bt;
}

Overlattice overlattice(const GlueSpec& spec) {
  Lattice sum = direct_sum(spec.first, spec.second);
  const IntMatrix& g = sum.gram();
  const std::size_t n = sum.rank();
  const auto& glue = spec.glue_vectors;
  for (std::size_t i = 0; i < glue.size(); ++i) {
    const auto& v = glue[i];
    if (v.size() != n) throw Error("glue vector " + std::to_string(i) + " has the wrong length");
    if (!integral_vector(gram_times(g, v)))
      throw Error("glue vector " + std::to_string(i) + " is not in the dual lattice");
    Rational self = dot(v, gram_times(g, v));
    if (mod_positive(self, 2) != 0)
      throw Error("glue vector " + std::to_string(i) + " is not isotropic: q = " + to_string(mod_positive(self, 2)));
    for (std::size_t j = 0; j < i; ++j)
      if (!is_integer(dot(glue[j], gram_times(g, v))))
        throw Error("glue vectors " + std::to_string(j) + " and " + std::to_string(i) + " have non-integral pairing");
  }
  Integer den = 1;
  for (const auto& v : glue) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), common_denominator(v).get_mpz_t());
  IntMatrix gens(n + glue.size(), n);
  for (std::size_t i = 0; i < n; ++i) gens(i, i) = den;
  for (std::size_t r = 0; r < glue.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) {
      Rational x = glue[r][j] * Rational(den);
      gens(n + r, j) = x.get_num();
    }
  HermiteResult hr = hermite_form(gens);
  IntMatrix h = hr.H.block(0, 0, n, n);
  RatMatrix basis(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      basis(i, j) = Rational(h(i, j), den);
      basis(i, j).canonicalize();
    }
  RatMatrix gram = basis * to_rational(g) * basis.transpose();
  if (!is_integral(gram)) throw Error("glued form is not integral");
  Integer volume = 1;
  for (std::size_t i = 0; i < n; ++i) volume *= den;
  Integer dh = abs(cyclolat::det(h));
  Integer index;
  mpz_divexact(index.get_mpz_t(), volume.get_mpz_t(), dh.get_mpz_t());
  return {Lattice(to_integer(gram), "overlattice"), std::move(basis), std::move(index)};
}

// ---------------------------------------------------------------- isometries

IsometryReport verify_isometry(const Lattice& l, const IntMatrix& c, unsigned long order) {
  if (!c.square() || c.rows() != l.rank())
    throw Error("isometry matrix is " + std::to_string(c.rows()) + "x" + std::to_string(c.cols()) + " but the lattice has rank " +
                std::to_string(l.rank()));
  if (order == 0) throw Error("isometry order must be positive");
  IsometryReport r;
  r.claimed_order = order;
  r.preserves_form = c.transpose() * l.gram() * c == l.gram();
  const IntMatrix id = IntMatrix::identity(l.rank());
  r.order_exact = matrix_power(c, order) == id;
  for (unsigned long q : prime_factors(order))
    if (r.order_exact && matrix_power(c, order / q) == id) r.order_exact = false;
  r.char_poly = char_poly(c);

  DiscGroup group = discriminant_group(l);
  r.discriminant_action_trivial = true;
  for (const auto& gen : group.generators) {
    auto image = apply(c, gen);
    std::vector<Rational> diff(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) diff[i] = image[i] - gen[i];
    if (!integral_vector(diff)) r.discriminant_action_trivial = false;
  }
  if (group.orders.empty()) {
    r.discriminant_multiplier = Integer(1);
  } else if (group.orders.size() == 1 && group.orders[0] <= 1000000) {
    const auto& gen = group.generators[0];
    auto image = apply(c, gen);
    for (unsigned long k = 0; k < group.orders[0].get_ui(); ++k) {
      std::vector<Rational> diff(image.size());
      for (std::size_t i = 0; i < image.size(); ++i) diff[i] = image[i] - Rational(Integer(k)) * gen[i];
      if (integral_vector(diff)) {
        r.discriminant_multiplier = Integer(k);
        break;
      }
    }
  }
  return r;
}

Invariants compute_invariants(const Lattice& l) {
  Invariants inv;
  inv.rank = l.rank();
  inv.signature = signature(l);
  inv.det = l.det();
  inv.even = l.is_even();
  if (inv.even) {
    DiscForm form = discriminant_form(l);
    inv.orders = form.orders;
    inv.qvalues = form.qvalues;
  } else {
    inv.orders = discriminant_group(l).orders;
  }
  if (inv.orders.empty()) {
    inv.p_elementary = true;
  } else if (std::all_of(inv.orders.begin(), inv.orders.end(), [&](const Integer& d) { return d == inv.orders.front(); }) &&
             inv.orders.front().fits_slong_p() && (inv.orders.front() == 2 || is_odd_prime(inv.orders.front().get_si()))) {
    inv.p_elementary = true;
    inv.elementary_prime = inv.orders.front().get_si();
    inv.elementary_length = static_cast<int>(inv.orders.size());
  }
  return inv;
}

}  // namespace cyclolat
