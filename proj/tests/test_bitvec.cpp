#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <queue>
#include <stdexcept>
#include <vector>

#include "terw/bitvec.hpp"
#include "terw/rational.hpp"

using namespace terw;

namespace {

// Oracle: graph distance by breadth-first search over the neighbour masks,
// independent of the closed-form weight formulas.
std::vector<int> bfs_distances(const GraphContext& ctx, int start) {
  std::vector<int> dist(static_cast<std::size_t>(ctx.vertex_count()), -1);
  std::queue<int> q;
  dist[static_cast<std::size_t>(start)] = 0;
  q.push(start);
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    const BitVector vb = ctx.vertices()[static_cast<std::size_t>(v)];
    for (const std::uint64_t m : ctx.neighbor_masks()) {
      const int u = ctx.index_of(BitVector{vb.bits ^ m});
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        q.push(u);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("hamming weight counts ones") {
  CHECK(hamming_weight(parse_bits("0110", 4)) == 2);
  CHECK(hamming_weight(parse_bits("1111", 4)) == 4);
  CHECK(hamming_weight(BitVector{0}) == 0);
  CHECK(hamming_weight(BitVector{(1ull << 24) - 1}) == 24);
}

TEST_CASE("bitstrings are most-significant-bit first") {
  CHECK(parse_bits("000011", 6).bits == 3);
  CHECK(parse_bits("100000", 6).bits == 32);
  CHECK(format_bits(BitVector{3}, 6) == "000011");
  CHECK(format_bits(BitVector{0}, 4) == "0000");
  for (std::uint64_t w = 0; w < 32; ++w)
    CHECK(parse_bits(format_bits(BitVector{w}, 5), 5) == BitVector{w});
}

TEST_CASE("bitstring parsing rejects bad input") {
  CHECK_THROWS_AS(parse_bits("0102", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_bits("01", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_bits("", 3), std::invalid_argument);
}

TEST_CASE("GF(2) addition is XOR") {
  CHECK(BitVector{0b0110} + BitVector{0b0011} == BitVector{0b0101});
  CHECK(BitVector{7} + BitVector{7} == BitVector{0});
}

TEST_CASE("vertex enumeration") {
  const GraphContext cube(3, Family::hypercube);
  REQUIRE(cube.vertex_count() == 8);
  for (int i = 0; i < 8; ++i)
    CHECK(cube.vertices()[static_cast<std::size_t>(i)].bits ==
          static_cast<std::uint64_t>(i));

  const GraphContext half(6, Family::halved_cube);
  REQUIRE(half.vertex_count() == 32);  // even-weight words only
  std::uint64_t prev = 0;
  bool first = true;
  for (const BitVector v : half.vertices()) {
    CHECK(hamming_weight(v) % 2 == 0);
    if (!first) CHECK(v.bits > prev);
    prev = v.bits;
    first = false;
  }
  CHECK(half.index_of(BitVector{3}) == 1);  // 0, 3, 5, 6, ...
}

TEST_CASE("context construction validates its input") {
  CHECK_THROWS_AS(GraphContext(2, Family::hypercube), std::invalid_argument);
  CHECK_THROWS_AS(GraphContext(25, Family::hypercube), std::invalid_argument);
  CHECK_THROWS_AS(GraphContext(4, Family::halved_cube, BitVector{1}),
                  std::invalid_argument);  // odd weight
  CHECK_THROWS_AS(GraphContext(3, Family::hypercube, BitVector{8}),
                  std::invalid_argument);  // out of range
  CHECK_NOTHROW(GraphContext(4, Family::halved_cube, BitVector{3}));
}

TEST_CASE("index_of rejects non-vertices") {
  const GraphContext half(4, Family::halved_cube);
  CHECK_THROWS_AS(half.index_of(BitVector{1}), std::invalid_argument);
  CHECK_THROWS_AS(half.distance(BitVector{0}, BitVector{1}), std::invalid_argument);
  CHECK(half.distance(BitVector{0}, BitVector{3}) == 1);
}

TEST_CASE("halved-cube distance example") {
  const GraphContext half(3, Family::halved_cube);
  CHECK(half.distance(parse_bits("000", 3), parse_bits("011", 3)) == 1);
}

TEST_CASE("closed-form distance equals breadth-first search") {
  for (Family f : {Family::hypercube, Family::halved_cube})
    for (int D = 3; D <= 6; ++D) {
      const GraphContext ctx(D, f);
      for (int s = 0; s < ctx.vertex_count(); ++s) {
        const std::vector<int> dist = bfs_distances(ctx, s);
        for (int v = 0; v < ctx.vertex_count(); ++v)
          REQUIRE(dist[static_cast<std::size_t>(v)] ==
                  ctx.distance(ctx.vertices()[static_cast<std::size_t>(s)],
                               ctx.vertices()[static_cast<std::size_t>(v)]));
      }
    }
}

TEST_CASE("valency and diameter") {
  const GraphContext cube(5, Family::hypercube);
  CHECK(cube.valency() == 5);
  CHECK(cube.diameter() == 5);
  const GraphContext half(7, Family::halved_cube);
  CHECK(half.valency() == 21);
  CHECK(half.diameter() == 3);
}

TEST_CASE("shells partition the vertex set by distance") {
  const GraphContext cube(5, Family::hypercube);
  for (int s = 0; s <= 5; ++s)
    CHECK(Int(cube.shells()[static_cast<std::size_t>(s)].size()) == binomial(5, s));

  const GraphContext half(7, Family::halved_cube);
  for (int s = 0; s <= 3; ++s)
    CHECK(Int(half.shells()[static_cast<std::size_t>(s)].size()) ==
          binomial(7, 2 * s));

  // Nonzero base: shells still count distances from it.
  const GraphContext shifted(5, Family::hypercube, parse_bits("10010", 5));
  int total = 0;
  for (int s = 0; s <= 5; ++s) {
    for (int v : shifted.shells()[static_cast<std::size_t>(s)]) {
      CHECK(shifted.shell_of(v) == s);
      CHECK(shifted.distance(shifted.base(),
                             shifted.vertices()[static_cast<std::size_t>(v)]) == s);
    }
    total += static_cast<int>(shifted.shells()[static_cast<std::size_t>(s)].size());
  }
  CHECK(total == 32);
}

TEST_CASE("neighbour masks generate exactly the distance-1 shell") {
  for (Family f : {Family::hypercube, Family::halved_cube}) {
    const GraphContext ctx(5, f);
    const BitVector x = ctx.vertices()[3];
    for (const std::uint64_t m : ctx.neighbor_masks())
      CHECK(ctx.distance(x, BitVector{x.bits ^ m}) == 1);
  }
}
