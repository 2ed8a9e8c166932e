#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "terw/bitvec.hpp"
#include "terw/rational.hpp"
#include "terw/vpoly.hpp"

using namespace terw;

TEST_CASE("recurrence produces the expected low-degree polynomials") {
  // t v_i = (D-i+1) v_{i-1} + (i+1) v_{i+1}
  const VPolynomial v2 = v_poly(3, 2);  // (t^2 - 3)/2
  CHECK(v2.coeffs == std::vector<Rational>{Rational(-3, 2), 0, Rational(1, 2)});

  const VPolynomial v4 = v_poly(4, 4);  // (t^4 - 16 t^2 + 24)/24
  CHECK(v4.coeffs == std::vector<Rational>{1, 0, Rational(-2, 3), 0, Rational(1, 24)});
  CHECK(v4.eval(2) == -1);
  CHECK(v4.eval(4) == 1);  // C(4,4)
}

TEST_CASE("v_i(D) counts the distance-i sphere") {
  for (int D = 3; D <= 8; ++D) {
    const auto v = v_family(D, D);
    for (int i = 0; i <= D; ++i)
      CHECK(v[static_cast<std::size_t>(i)].eval(D) == binomial(D, i));
  }
}

TEST_CASE("Krawtchouk evaluation") {
  CHECK(krawtchouk_eval(0, 3, 2, 5) == 1);
  CHECK(krawtchouk_eval(1, 3, 2, 5) == Rational(-1, 5));
  CHECK(krawtchouk_eval(1, 0, 2, 5) == 1);
  // Rational argument: K_1(t; 2, n) = 1 - 2t/n.
  CHECK(krawtchouk_eval(1, Rational(1, 2), 2, 4) == Rational(3, 4));
  CHECK_THROWS_AS(krawtchouk_eval(-1, 0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk_eval(5, 0, 2, 4), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk_eval(1, 0, 0, 4), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk_eval(1, 0, 2, 0), std::invalid_argument);
}

TEST_CASE("scaled Krawtchouk identity and endpoint values") {
  for (int D = 3; D <= 10; ++D) {
    const Verdict v = v_eval_identity_check(D);
    INFO(v.detail);
    CHECK(v.ok);
    const Verdict t = v_top_values_check(D);
    INFO(t.detail);
    CHECK(t.ok);
  }
}

TEST_CASE("second-highest polynomial endpoint values, explicit") {
  const VPolynomial v = v_poly(6, 5);
  for (int n = 0; n <= 6; ++n)
    CHECK(v.eval(6 - 2 * n) == Rational(n % 2 == 0 ? 1 : -1) * (6 - 2 * n));
}

TEST_CASE("polynomials applied to the adjacency matrix give distance matrices") {
  for (int D = 3; D <= 6; ++D) {
    const GraphContext ctx(D, Family::hypercube);
    const Verdict v = distance_matrix_identity_check(ctx);
    INFO(v.detail);
    CHECK(v.ok);
  }
  const GraphContext half(4, Family::halved_cube);
  CHECK_THROWS_AS(distance_matrix_identity_check(half), std::invalid_argument);
}

TEST_CASE("family construction validates its range") {
  CHECK_THROWS_AS(v_family(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(v_family(3, -1), std::invalid_argument);
  CHECK(v_family(5, 0).size() == 1);
}
