#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "terw/bitvec.hpp"
#include "terw/qmatrix.hpp"
#include "terw/scheme.hpp"
#include "terw/span.hpp"

using namespace terw;

TEST_CASE("span basis membership and growth") {
  SpanBasis s(2, 2);
  CHECK(s.dimension() == 0);
  CHECK(s.insert(QMatrix::identity(2)));
  CHECK_FALSE(s.insert(QMatrix::identity(2)));
  CHECK_FALSE(s.insert(Rational(2) * QMatrix::identity(2)));
  CHECK(s.contains(Rational(-3) * QMatrix::identity(2)));
  CHECK(s.insert(QMatrix::from_rows({{0, 1}, {0, 0}})));
  CHECK(s.dimension() == 2);
  CHECK(s.contains(QMatrix::from_rows({{5, 7}, {0, 5}})));
  CHECK_FALSE(s.contains(QMatrix::from_rows({{0, 0}, {1, 0}})));
  CHECK_THROWS_AS(s.insert(QMatrix(3, 3)), std::invalid_argument);
}

TEST_CASE("adjacency of a complete graph generates a 2-dimensional algebra") {
  // The halved 3-cube is K4: A^2 = 3I + 2A closes the span at {I, A}.
  const GraphContext ctx(3, Family::halved_cube);
  const QMatrix a = adjacency_matrix(ctx);
  const ClosureResult res = span_closure({a});
  CHECK(res.span.dimension() == 2);
  QMatrix j(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) j.at(i, k) = 1;
  CHECK(res.span.contains(j));
}

TEST_CASE("hypercube adjacency generates the Bose-Mesner algebra") {
  // dim = D+1, a basis being the distance matrices.
  for (int D = 3; D <= 5; ++D) {
    const GraphContext ctx(D, Family::hypercube);
    const ClosureResult res = span_closure({adjacency_matrix(ctx)});
    CHECK(res.span.dimension() == D + 1);
    for (int i = 0; i <= D; ++i) CHECK(res.span.contains(distance_matrix(ctx, i)));
  }
}

TEST_CASE("two-generator closure of the halved 3-cube") {
  const GraphContext ctx(3, Family::halved_cube);
  const QMatrix a = adjacency_matrix(ctx);
  const QMatrix astar = dual_adjacency(ctx);
  const ClosureResult res = span_closure({a, astar});
  CHECK(res.span.dimension() == 5);
  CHECK(res.products_formed > 0);
}

TEST_CASE("closure is independent of generator order") {
  const GraphContext ctx(4, Family::halved_cube);
  const QMatrix a = adjacency_matrix(ctx);
  const QMatrix astar = dual_adjacency(ctx);
  const ClosureResult fwd = span_closure({a, astar});
  const ClosureResult rev = span_closure({astar, a});
  CHECK(fwd.span == rev.span);
}

TEST_CASE("closure contains all short words in the generators") {
  const GraphContext ctx(4, Family::halved_cube);
  const std::vector<QMatrix> gens{adjacency_matrix(ctx), dual_adjacency(ctx)};
  const ClosureResult res = span_closure(gens);

  std::vector<QMatrix> words{QMatrix::identity(ctx.vertex_count())};
  for (int len = 1; len <= 5; ++len) {
    std::vector<QMatrix> next;
    for (const QMatrix& w : words)
      for (const QMatrix& g : gens) next.push_back(w * g);
    for (const QMatrix& w : next) REQUIRE(res.span.contains(w));
    // Keep the frontier small: products with the first generator only.
    words.clear();
    for (std::size_t i = 0; i < next.size(); i += 2) words.push_back(next[i]);
  }
}

TEST_CASE("closure input validation") {
  CHECK_THROWS_AS(span_closure({}), std::invalid_argument);
  CHECK_THROWS_AS(span_closure({QMatrix(2, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(span_closure({QMatrix(2, 2), QMatrix(3, 3)}),
                  std::invalid_argument);
}
