#include "doctest.h"
#include "support.hpp"

#include "cyclolat/serialize.hpp"
#include "cyclolat/scenarios.hpp"

using namespace cyclolat;
using oracle::rat;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int range) {
  std::uniform_int_distribution<int> d(-range, range);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

bool is_diagonal_chain(const IntMatrix& d) {
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k && d(i + 1, i + 1) != 0 && (d(i, i) == 0 || d(i + 1, i + 1) % d(i, i) != 0)) return false;
    if (i + 1 < k && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("det") {
  CHECK(det(hyperbolic_plane().gram()) == -1);
  CHECK(det(k23().gram()) == 23);
  CHECK(det(appendix_lattice(fixture_dir()).gram()) == 23);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), Error);
  std::mt19937 rng(1);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix m = random_matrix(rng, 5, 5, 9);
    CHECK(Rational(det(m)) == oracle::gauss_det(to_rational(m)));
  }
}

TEST_CASE("snf examples") {
  CHECK(snf(IntMatrix{{46}}).diagonal() == std::vector<Integer>{46});
  CHECK(snf(hyperbolic_plane().gram()).diagonal() == std::vector<Integer>{1, 1});
  auto d = snf(appendix_lattice(fixture_dir()).gram()).diagonal();
  REQUIRE(d.size() == 22);
  CHECK(d.back() == 23);
  CHECK(std::all_of(d.begin(), d.end() - 1, [](const Integer& x) { return x == 1; }));
}

TEST_CASE("snf: U A V = D with a divisibility chain and unimodular transforms") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<int> dim(1, 5);
    const IntMatrix a = random_matrix(rng, static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)), 12);
    const SNFResult s = snf(a);
    CHECK(s.U * a * s.V == s.D);
    CHECK(is_diagonal_chain(s.D));
    CHECK(abs(det(s.U)) == 1);
    CHECK(abs(det(s.V)) == 1);
    if (a.rows() == a.cols() && det(a) != 0) {
      Integer prod = 1;
      for (const auto& x : s.diagonal()) prod *= x;
      CHECK(prod == abs(det(a)));
    }
  }
}

TEST_CASE("snf is deterministic") {
  const IntMatrix g = appendix_lattice(fixture_dir()).gram();
  const SNFResult a = snf(g), b = snf(g);
  CHECK(a.U == b.U);
  CHECK(a.V == b.V);
}

TEST_CASE("hermite_form") {
  std::mt19937 rng(9);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix a = random_matrix(rng, 4, 3, 10);
    const HermiteResult h = hermite_form(a);
    CHECK(h.U * a == h.H);
    CHECK(abs(det(h.U)) == 1);
    CHECK(h.rank == rank(a));
  }
}

TEST_CASE("int_kernel") {
  CHECK(int_kernel(IntMatrix{{1, 0}}) == IntMatrix{{0}, {1}});
  const IntMatrix k = int_kernel(IntMatrix{{12, 2, -2}});
  REQUIRE(k.cols() == 2);
  CHECK(IntMatrix{{12, 2, -2}} * k == IntMatrix(1, 2));
  CHECK(snf(k).diagonal() == std::vector<Integer>{1, 1});
  // Every integral solution of 12x + 2y - 2z = 0 in a small box is in the span.
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) {
      const int twice_z = 12 * x + 2 * y;
      const std::vector<Rational> v{Rational(x), Rational(y), Rational(twice_z / 2)};
      const auto c = rational_solve(to_rational(k), v);
      REQUIRE(c.has_value());
      for (const auto& q : *c) CHECK(is_integer(q));
    }
  CHECK(int_kernel(IntMatrix{{2, 1}, {1, 1}}).cols() == 0);
  std::mt19937 rng(4);
  for (int t = 0; t < 20; ++t) {
    const IntMatrix a = random_matrix(rng, 2, 5, 6);
    const IntMatrix kk = int_kernel(a);
    CHECK(a * kk == IntMatrix(2, kk.cols()));
    CHECK(static_cast<int>(kk.cols()) == 5 - rank(a));
    for (const auto& x : snf(kk).diagonal()) CHECK(x == 1);
    CHECK(int_kernel(a) == kk);
  }
}

TEST_CASE("rational_inverse") {
  CHECK(rational_inverse(IntMatrix{{46}})(0, 0) == rat(1, 46));
  CHECK(rational_inverse(hyperbolic_plane().gram()) == to_rational(hyperbolic_plane().gram()));
  RatMatrix expected(2, 2);
  expected(0, 0) = rat(-2, 23);
  expected(0, 1) = expected(1, 0) = rat(-1, 23);
  expected(1, 1) = rat(-12, 23);
  CHECK(rational_inverse(k23().gram()) == expected);
  CHECK_THROWS_AS(rational_inverse(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  std::mt19937 rng(12);
  for (int t = 0; t < 10; ++t) {
    const IntMatrix m = random_matrix(rng, 4, 4, 7);
    if (det(m) == 0) continue;
    CHECK(to_rational(m) * rational_inverse(m) == RatMatrix::identity(4));
  }
}

TEST_CASE("congruent_diag") {
  CHECK(congruent_diag(hyperbolic_plane().gram()) == Signature{1, 1});
  CHECK(congruent_diag(e8().gram()) == Signature{0, 8});
  CHECK(congruent_diag(appendix_lattice(fixture_dir()).gram()) == Signature{2, 20});
  CHECK_THROWS_AS(congruent_diag(IntMatrix{{1, 1}, {1, 1}}), Error);
  // Zero diagonal everywhere forces the pivot maneuver.
  CHECK(congruent_diag(IntMatrix{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}) == Signature{1, 2});
}

TEST_CASE("congruent_diag agrees with Descartes' rule on the characteristic polynomial") {
  std::mt19937 rng(31);
  int tested = 0;
  for (int t = 0; t < 80; ++t) {
    std::uniform_int_distribution<int> dim(1, 6);
    IntMatrix g = oracle::random_symmetric(rng, static_cast<std::size_t>(dim(rng)), 5);
    if (t % 3 == 0)
      for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) = 0;
    if (det(g) == 0) continue;
    ++tested;
    CHECK(congruent_diag(g) == oracle::descartes_signature(g));
  }
  CHECK(tested > 40);
}

TEST_CASE("char_poly and companion_matrix") {
  std::mt19937 rng(6);
  for (int t = 0; t < 10; ++t) {
    const IntMatrix a = random_matrix(rng, 4, 4, 5);
    const auto cp = char_poly(a);
    const auto oracle_cp = oracle::charpoly_interp(a);
    REQUIRE(cp.size() == oracle_cp.size());
    for (std::size_t i = 0; i < cp.size(); ++i) CHECK(Rational(cp[i]) == oracle_cp[i]);
  }
  const IntMatrix c = companion_matrix({Integer(1), Integer(1), Integer(1), Integer(1), Integer(1)});
  CHECK(c == IntMatrix{{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}});
  CHECK(matrix_power(c, 5) == IntMatrix::identity(4));
}

TEST_CASE("matrix text format round trips") {
  std::mt19937 rng(10);
  const IntMatrix m = random_matrix(rng, 3, 4, 1000);
  CHECK(parse_int_matrix(format_matrix(m)) == m);
  RatMatrix r(2, 3);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) = oracle::random_rational(rng, 50, 40);
  CHECK(parse_rat_matrix(format_matrix(r)) == r);
  CHECK(format_matrix(parse_int_matrix(format_matrix(m))) == format_matrix(m));
  CHECK(parse_int_matrix("# label\n2 2\n0 1\n1 0\n") == hyperbolic_plane().gram());
  CHECK_THROWS_AS(parse_int_matrix("2 2\n0 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse_int_matrix("2 2\n0 1/2\n1 0\n"), ParseError);
}
