#pragma once

// Binary Hamming space: vertices of the hypercube H(D,2) and of the halved
// cube 1/2 H(D,2) as bit words, plus the graph contexts the rest of the
// library works against.
//
// Conventions fixed here and relied on everywhere else:
//   * vertices are ordered by ascending integer value of the bit word;
//   * bitstrings render most-significant bit first, so "000011" is the
//     word of weight 2 with value 3;
//   * the halved cube lives on the even-weight words.

#include <cstdint>
#include <string>
#include <vector>

namespace terw {

struct BitVector {
  std::uint64_t bits = 0;

  friend BitVector operator+(BitVector a, BitVector b) {  // GF(2) addition
    return BitVector{a.bits ^ b.bits};
  }
  friend bool operator==(BitVector a, BitVector b) { return a.bits == b.bits; }
  friend bool operator<(BitVector a, BitVector b) { return a.bits < b.bits; }
};

int hamming_weight(BitVector v);

// Parses a string of '0'/'1' of length D, leftmost character most
// significant. Throws std::invalid_argument on other characters or if the
// length disagrees with D.
BitVector parse_bits(const std::string& s, int D);
std::string format_bits(BitVector v, int D);

enum class Family { hypercube, halved_cube };

std::string family_name(Family f);

// A graph from one of the two families together with a base vertex.
// Construction validates 3 <= D <= 24 and, for the halved cube, that the
// base has even weight; violations throw std::invalid_argument.
class GraphContext {
 public:
  GraphContext(int D, Family family, BitVector base = BitVector{0});

  int D() const { return D_; }
  Family family() const { return family_; }
  BitVector base() const { return base_; }
  int diameter() const { return diameter_; }

  const std::vector<BitVector>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int index_of(BitVector v) const;  // throws if v is not a vertex

  // XOR masks whose application to a vertex yields exactly its neighbours:
  // the D single-bit masks for the hypercube, the D(D-1)/2 two-bit masks
  // for the halved cube.
  const std::vector<std::uint64_t>& neighbor_masks() const {
    return neighbor_masks_;
  }
  int valency() const { return static_cast<int>(neighbor_masks_.size()); }

  // Path-length distance. Hypercube: the Hamming weight of x+y. Halved
  // cube: half of it (the weight is even for any two vertices). The
  // closed forms are cross-checked against breadth-first search in the
  // test suite. Throws if either argument is not a vertex.
  int distance(BitVector x, BitVector y) const;

  // Distance from the base vertex, by vertex index.
  int shell_of(int vertex_index) const { return shell_[vertex_index]; }

  // Vertex indices at each distance from the base; sizes are the valencies
  // k_i of the distance-i graphs.
  const std::vector<std::vector<int>>& shells() const { return shells_; }

 private:
  int D_;
  Family family_;
  BitVector base_;
  int diameter_;
  std::vector<BitVector> vertices_;
  std::vector<std::int32_t> index_lut_;  // 2^D entries, -1 for non-vertices
  std::vector<std::uint64_t> neighbor_masks_;
  std::vector<int> shell_;
  std::vector<std::vector<int>> shells_;
};

}  // namespace terw
