#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "terw/bitvec.hpp"
#include "terw/qmatrix.hpp"
#include "terw/scheme.hpp"

using namespace terw;

namespace {

QMatrix lcg_matrix(int rows, int cols, std::uint64_t seed) {
  QMatrix m(rows, cols);
  std::uint64_t s = seed;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      s = s * 6364136223846793005ULL + 1442695040888963407ULL;
      m.at(i, j) = static_cast<long>(s >> 60) - 7;  // small ints, some zeros
    }
  return m;
}

// (poly) * (t - root)^power, monomial coefficients ascending.
std::vector<Rational> multiply_root_power(std::vector<Rational> p, const Rational& root,
                                          int power) {
  for (int r = 0; r < power; ++r) {
    std::vector<Rational> q(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + 1] += p[i];
      q[i] -= root * p[i];
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace

TEST_CASE("rref of canonical examples") {
  const QMatrix id = QMatrix::identity(3);
  CHECK(rref(id) == id);
  CHECK(rank(id) == 3);

  const QMatrix zero(2, 3);
  CHECK(rref(zero) == zero);
  CHECK(rank(zero) == 0);

  const QMatrix rank1 = QMatrix::from_rows({{1, 2}, {2, 4}});
  const RrefResult r = rref_with_pivots(rank1);
  CHECK(r.form == QMatrix::from_rows({{1, 2}, {0, 0}}));
  CHECK(r.pivot_cols == std::vector<int>{0});

  CHECK(rref(QMatrix::from_rows({{0, 1}, {1, 0}})) == QMatrix::identity(2));

  const QMatrix frac = QMatrix::from_rows({{Rational(1, 2), Rational(1, 4)}});
  CHECK(rref(frac) == QMatrix::from_rows({{1, Rational(1, 2)}}));
}

TEST_CASE("rref is idempotent on random matrices") {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const QMatrix m = lcg_matrix(5, 7, seed);
    const QMatrix r = rref(m);
    CHECK(rref(r) == r);
  }
}

TEST_CASE("kernel of fixed examples") {
  const auto k1 = kernel_basis(QMatrix::from_rows({{1, 1}}));
  REQUIRE(k1.size() == 1);
  CHECK(k1[0] == std::vector<Rational>{-1, 1});

  CHECK(kernel_basis(QMatrix::identity(4)).empty());

  // Zero matrix: every column is free, kernel is the standard basis.
  const auto kz = kernel_basis(QMatrix(2, 3));
  REQUIRE(kz.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(kz[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] ==
            (i == j ? 1 : 0));
}

TEST_CASE("rank-nullity and kernel membership on random matrices") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    for (auto [rows, cols] : {std::pair{6, 4}, std::pair{4, 6}}) {
      const QMatrix m = lcg_matrix(rows, cols, seed * 17 + rows);
      const auto kern = kernel_basis(m);
      CHECK(rank(m) + static_cast<int>(kern.size()) == cols);
      for (const auto& v : kern) {
        const std::vector<Rational> mv = m.apply(v);
        for (const Rational& x : mv) CHECK(x == 0);
      }
    }
  }
}

TEST_CASE("characteristic polynomial of small matrices") {
  CHECK(characteristic_polynomial(QMatrix::from_rows({{5}})) ==
        std::vector<Rational>{-5, 1});
  CHECK(characteristic_polynomial(QMatrix::from_rows({{2, 1}, {0, 3}})) ==
        std::vector<Rational>{6, -5, 1});
  // Companion matrix of t^3 - 2t - 5.
  const QMatrix comp = QMatrix::from_rows({{0, 0, 5}, {1, 0, 2}, {0, 1, 0}});
  CHECK(characteristic_polynomial(comp) == std::vector<Rational>{-5, -2, 0, 1});
}

TEST_CASE("characteristic polynomial of the halved 5-cube adjacency") {
  const GraphContext ctx(5, Family::halved_cube);
  const QMatrix a = adjacency_matrix(ctx);
  REQUIRE(a.rows() == 16);
  // Spectrum 10, 2, -2 with multiplicities 1, 5, 10.
  std::vector<Rational> want{1};
  want = multiply_root_power(std::move(want), 10, 1);
  want = multiply_root_power(std::move(want), 2, 5);
  want = multiply_root_power(std::move(want), -2, 10);
  CHECK(characteristic_polynomial(a) == want);
}

TEST_CASE("matrix arithmetic basics") {
  const QMatrix a = lcg_matrix(4, 4, 3);
  const QMatrix b = lcg_matrix(4, 4, 4);
  const QMatrix c = lcg_matrix(4, 4, 5);
  CHECK(a * (b + c) == a * b + a * c);

  // Fractional entries leave the integer fast path; results must agree.
  const QMatrix af = Rational(1, 3) * a;
  CHECK(Rational(3) * (af * b) == a * b);

  CHECK(a.transpose().transpose() == a);
  CHECK((a * b).trace() == (b * a).trace());
  CHECK(a.hadamard(b) == b.hadamard(a));

  const QMatrix wide(2, 3);
  CHECK_THROWS_AS(a * wide, std::invalid_argument);
  CHECK_THROWS_AS(a + wide, std::invalid_argument);
}

TEST_CASE("identity and apply") {
  const QMatrix m = QMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(QMatrix::identity(2) * m == m);
  const std::vector<Rational> v{Rational(1), Rational(-1)};
  CHECK(m.apply(v) == std::vector<Rational>{-1, -1});
  CHECK(m.is_integer());
  QMatrix f = m;
  f.at(0, 0) = Rational(1, 2);
  CHECK_FALSE(f.is_integer());
}
