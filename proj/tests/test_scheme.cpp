#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "terw/bitvec.hpp"
#include "terw/qmatrix.hpp"
#include "terw/rational.hpp"
#include "terw/scheme.hpp"

using namespace terw;

namespace {

void check_verdict(const Verdict& v) {
  INFO(v.detail);
  CHECK(v.ok);
}

}  // namespace

TEST_CASE("closed-form intersection numbers") {
  const IntersectionArray cube = closed_form_intersection_numbers(4, Family::hypercube);
  CHECK(cube.b == std::vector<Int>{4, 3, 2, 1, 0});
  CHECK(cube.c == std::vector<Int>{0, 1, 2, 3, 4});
  CHECK(cube.a == std::vector<Int>{0, 0, 0, 0, 0});

  const IntersectionArray half = closed_form_intersection_numbers(6, Family::halved_cube);
  CHECK(half.a == std::vector<Int>{0, 8, 8, 0});
  CHECK(half.b == std::vector<Int>{15, 6, 1, 0});
  CHECK(half.c == std::vector<Int>{0, 1, 6, 15});
}

TEST_CASE("intersection numbers verified by exhaustive counting") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 6; ++D) check_verdict(counted_intersection_check(GraphContext(D, f)));
}

TEST_CASE("closed-form eigenvalues") {
  CHECK(eigenvalues_closed_form(4, Family::hypercube) ==
        std::vector<Rational>{4, 2, 0, -2, -4});
  CHECK(eigenvalues_closed_form(6, Family::halved_cube) ==
        std::vector<Rational>{15, 5, -1, -3});
  CHECK(eigenvalues_closed_form(5, Family::halved_cube) ==
        std::vector<Rational>{10, 2, -2});
}

TEST_CASE("idempotent coefficients satisfy the algebra relations") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 8; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      check_verdict(s.coefficient_invariants());
    }
}

TEST_CASE("materialized idempotents: resolution of identity and products") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 5; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      const int n = ctx.vertex_count();
      const QMatrix a = adjacency_matrix(ctx);

      std::vector<QMatrix> e;
      for (int i = 0; i <= s.d(); ++i) e.push_back(idempotent_matrix(ctx, s, i));

      QMatrix sum(n, n);
      for (const QMatrix& ei : e) sum = sum + ei;
      CHECK(sum == QMatrix::identity(n));

      for (int i = 0; i <= s.d(); ++i) {
        CHECK(a * e[static_cast<std::size_t>(i)] ==
              s.eigenvalues()[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)]);
        for (int j = 0; j <= s.d(); ++j) {
          const QMatrix prod = e[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j)];
          CHECK(prod == (i == j ? e[static_cast<std::size_t>(i)] : QMatrix(n, n)));
        }
      }
    }
}

TEST_CASE("trivial idempotent is J/n") {
  const GraphContext k4(3, Family::halved_cube);
  const SchemeData s(k4);
  const QMatrix e0 = idempotent_matrix(k4, s, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(e0.at(i, j) == Rational(1, 4));
}

TEST_CASE("multiplicities: traces, closed forms, and rank cross-check") {
  const GraphContext cube(4, Family::hypercube);
  const SchemeData sc(cube);
  const SpectralData sd = spectral_data(cube, sc);
  CHECK(sd.multiplicities == std::vector<Int>{1, 4, 6, 4, 1});

  const GraphContext half(6, Family::halved_cube);
  const SchemeData sh(half);
  const SpectralData hd = spectral_data(half, sh);
  CHECK(hd.multiplicities == std::vector<Int>{1, 6, 15, 10});

  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 6; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      const SpectralData x = spectral_data(ctx, s);
      Int total = 0;
      for (const Int& m : x.multiplicities) total += m;
      CHECK(total == ctx.vertex_count());
      check_verdict(spectrum_rank_check(ctx, s));
    }
}

TEST_CASE("dual adjacency matches the scaled first idempotent") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 7; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      check_verdict(dual_adjacency_check(ctx, s));

      // Entrywise: diagonal D - 2 w(x + y), here with base 0 so just weight.
      const QMatrix astar = dual_adjacency(ctx);
      for (int v = 0; v < ctx.vertex_count(); ++v)
        CHECK(astar.at(v, v) ==
              D - 2 * hamming_weight(ctx.vertices()[static_cast<std::size_t>(v)]));
    }
}

TEST_CASE("dual parameters from the entrywise-product expansion") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 8; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      const QPolyOutcome q = q_polynomial_check(ctx, s);
      check_verdict(q.verdict);
      CHECK(q.dual == closed_form_dual_parameters(D, f));
    }
}

TEST_CASE("closed-form dual parameters: parity split at the top index") {
  const DualParameters even = closed_form_dual_parameters(6, Family::halved_cube);
  CHECK(even.cstar[3] == 6);
  CHECK(even.astar[3] == 0);
  const DualParameters odd = closed_form_dual_parameters(5, Family::halved_cube);
  CHECK(odd.astar[2] == 3);
  CHECK(odd.cstar[2] == 2);
  const DualParameters cube = closed_form_dual_parameters(5, Family::hypercube);
  for (int i = 0; i <= 4; ++i) CHECK(cube.bstar[static_cast<std::size_t>(i)] == 5 - i);
  for (int i = 1; i <= 5; ++i) CHECK(cube.cstar[static_cast<std::size_t>(i)] == i);
}

TEST_CASE("dense three-term recurrence of entrywise products") {
  // |X| E_1 o E_i = b*_{i-1} E_{i-1} + a*_i E_i + c*_{i+1} E_{i+1}
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 4; D <= 5; ++D) {
      const GraphContext ctx(D, f);
      const SchemeData s(ctx);
      const DualParameters dp = closed_form_dual_parameters(D, f);
      const int n = ctx.vertex_count();
      std::vector<QMatrix> e;
      for (int i = 0; i <= s.d(); ++i) e.push_back(idempotent_matrix(ctx, s, i));
      for (int i = 0; i <= s.d(); ++i) {
        QMatrix lhs = Rational(n) * e[1].hadamard(e[static_cast<std::size_t>(i)]);
        QMatrix rhs = dp.astar[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(i)];
        if (i > 0)
          rhs = rhs + dp.bstar[static_cast<std::size_t>(i) - 1] * e[static_cast<std::size_t>(i) - 1];
        if (i < s.d())
          rhs = rhs + dp.cstar[static_cast<std::size_t>(i) + 1] * e[static_cast<std::size_t>(i) + 1];
        CHECK(lhs == rhs);
      }
    }
}

TEST_CASE("halved-cube structure restricts from the cube") {
  for (int D = 3; D <= 8; ++D) {
    check_verdict(adjacency_restriction_check(D));
    check_verdict(idempotent_folding_check(D));
    check_verdict(dual_restriction_check(D));
  }
}

TEST_CASE("idempotent ranks are the multiplicities") {
  const GraphContext ctx(5, Family::hypercube);
  const SchemeData s(ctx);
  for (int i = 0; i <= 5; ++i) CHECK(s.idempotent_rank(i) == binomial(5, i));
}
