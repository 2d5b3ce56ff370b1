#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oddgraph {

using Mask = std::uint64_t;

// Largest supported k; every vertex fits one 64-bit word and ranks fit uint64.
inline constexpr int kMaxOrder = 30;

/// A vertex of O_k (a k-subset of Z_n) or of the middle-levels graph, stored
/// as its characteristic bit mask. Bit p is position p of the bitstring,
/// position 0 being the leftmost character.
struct Vertex {
  Mask bits = 0;

  constexpr int weight() const { return std::popcount(bits); }
  constexpr bool has(int position) const { return (bits >> position) & 1u; }
  friend constexpr auto operator<=>(Vertex, Vertex) = default;
};

constexpr Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

constexpr Vertex complement(Vertex v, int n) { return Vertex{~v.bits & full_mask(n)}; }

// Cyclic shift of positions by +j mod n.
constexpr Vertex rotate(Vertex v, int j, int n) {
  j = ((j % n) + n) % n;
  if (j == 0) return v;
  Mask m = v.bits & full_mask(n);
  return Vertex{((m << j) | (m >> (n - j))) & full_mask(n)};
}

std::string to_bitstring(Vertex v, int n);
Vertex parse_bitstring(const std::string& text);

// Support as sorted positions.
std::vector<int> support(Vertex v, int n);

// All n-bit masks of the given weight, ascending (Gosper's hack).
std::vector<Vertex> all_of_weight(int n, int weight);

std::uint64_t binomial(int n, int r);

// Base-36 digit used by every text rendering (0-9 then a-z).
char digit_char(int value);
int digit_value(char c);

/// Undirected edge between two bit masks, stored with the smaller mask first.
struct Edge {
  Mask a = 0;
  Mask b = 0;

  static constexpr Edge of(Mask x, Mask y) { return x < y ? Edge{x, y} : Edge{y, x}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t h = e.a * 0x9E3779B97F4A7C15ull;
    h ^= e.b + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

struct VertexHash {
  std::size_t operator()(Vertex v) const noexcept { return std::hash<Mask>{}(v.bits); }
};

}  // namespace oddgraph
