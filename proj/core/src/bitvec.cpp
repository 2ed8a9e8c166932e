#include "terw/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace terw {

int hamming_weight(BitVector v) { return std::popcount(v.bits); }

BitVector parse_bits(const std::string& s, int D) {
  if (static_cast<int>(s.size()) != D)
    throw std::invalid_argument("bitstring length " + std::to_string(s.size()) +
                                " does not match D=" + std::to_string(D));
  std::uint64_t bits = 0;
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("bitstring must contain only 0 and 1");
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitVector{bits};
}

std::string format_bits(BitVector v, int D) {
  std::string s(static_cast<std::size_t>(D), '0');
  for (int i = 0; i < D; ++i)
    if (v.bits >> (D - 1 - i) & 1) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

std::string family_name(Family f) {
  return f == Family::hypercube ? "hypercube" : "halved-cube";
}

GraphContext::GraphContext(int D, Family family, BitVector base)
    : D_(D), family_(family), base_(base) {
  if (D < 3 || D > 24)
    throw std::invalid_argument("D must be in [3, 24], got " + std::to_string(D));
  const std::uint64_t space = 1ull << D;
  if (base.bits >= space)
    throw std::invalid_argument("base vertex out of range for D=" + std::to_string(D));
  const bool halved = family == Family::halved_cube;
  if (halved && hamming_weight(base) % 2 != 0)
    throw std::invalid_argument("halved-cube base vertex must have even weight");

  diameter_ = halved ? D / 2 : D;

  index_lut_.assign(space, -1);
  for (std::uint64_t w = 0; w < space; ++w) {
    if (halved && (std::popcount(w) & 1)) continue;
    index_lut_[w] = static_cast<std::int32_t>(vertices_.size());
    vertices_.push_back(BitVector{w});
  }

  if (halved) {
    for (int i = 0; i < D; ++i)
      for (int j = i + 1; j < D; ++j)
        neighbor_masks_.push_back((1ull << i) | (1ull << j));
  } else {
    for (int i = 0; i < D; ++i) neighbor_masks_.push_back(1ull << i);
  }

  shell_.resize(vertices_.size());
  shells_.assign(static_cast<std::size_t>(diameter_) + 1, {});
  for (int v = 0; v < vertex_count(); ++v) {
    const int s = distance(base_, vertices_[static_cast<std::size_t>(v)]);
    shell_[static_cast<std::size_t>(v)] = s;
    shells_[static_cast<std::size_t>(s)].push_back(v);
  }
}

int GraphContext::index_of(BitVector v) const {
  if (v.bits >= index_lut_.size() || index_lut_[v.bits] < 0)
    throw std::invalid_argument("not a vertex of this graph");
  return index_lut_[v.bits];
}

int GraphContext::distance(BitVector x, BitVector y) const {
  index_of(x);
  index_of(y);
  const int w = hamming_weight(x + y);
  return family_ == Family::halved_cube ? w / 2 : w;
}

}  // namespace terw
