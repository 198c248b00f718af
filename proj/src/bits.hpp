#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "qclique/graph.hpp"

namespace qclique::detail {

/// Fixed-size bitset sized at runtime.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(Vertex v) { words_[word(v)] |= mask(v); }
  void reset(Vertex v) { words_[word(v)] &= ~mask(v); }
  bool test(Vertex v) const { return (words_[word(v)] & mask(v)) != 0; }

  std::size_t count_common(const Bits& other) const {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    return total;
  }

 private:
  static std::size_t word(Vertex v) { return static_cast<std::size_t>(v) >> 6; }
  static std::uint64_t mask(Vertex v) { return std::uint64_t{1} << (static_cast<unsigned>(v) & 63U); }

  std::vector<std::uint64_t> words_;
};

inline std::vector<Bits> adjacency_bits(const Graph& g) {
  std::vector<Bits> rows(static_cast<std::size_t>(g.num_vertices()), Bits(static_cast<std::size_t>(g.num_vertices())));
  for (const Edge& e : g.edges()) {
    rows[static_cast<std::size_t>(e.u)].set(e.v);
    rows[static_cast<std::size_t>(e.v)].set(e.u);
  }
  return rows;
}

/// gamma as an exact integer fraction num/den (both fit in 64 bits).
struct GammaFraction {
  long long num = 1;
  long long den = 1;

  /// 2 * edges >= gamma * size * (size - 1), i.e. density >= gamma (size >= 2).
  bool admits(long long twice_edges, long long size) const {
    if (size <= 1) return true;
    return static_cast<__int128>(twice_edges) * den >= static_cast<__int128>(num) * size * (size - 1);
  }
};

inline GammaFraction gamma_fraction(const Rational& gamma) {
  const BigInt num = boost::multiprecision::numerator(gamma);
  const BigInt den = boost::multiprecision::denominator(gamma);
  if (num > BigInt(1) << 40 || den > BigInt(1) << 40) {
    throw std::invalid_argument("gamma numerator/denominator too large");
  }
  return GammaFraction{num.convert_to<long long>(), den.convert_to<long long>()};
}

}  // namespace qclique::detail
