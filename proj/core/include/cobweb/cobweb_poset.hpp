#pragma once

// The Fibonacci cobweb poset: level s holds F_s vertices (one at the root
// level 0) and every vertex of level s is covered by every vertex of
// level s + 1. Vertices are numbered linearly level by level, which is a
// linear extension of the order.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cobweb/fibonacci.hpp"

namespace cobweb {

// Largest level whose linear indices still fit in 64 bits.
inline constexpr std::uint32_t kMaxLevel = 90;

// <pos, level>: the pos-th vertex (1-based) of the given level.
struct Vertex {
  std::uint32_t level = 0;
  std::uint64_t pos = 1;

  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline constexpr Vertex kRoot{.level = 0, .pos = 1};

std::string to_string(const Vertex& v);

// 1 for s = 0, otherwise F_s.
std::uint64_t level_size(std::uint32_t s);

bool is_valid(const Vertex& v);
// Throws std::invalid_argument unless is_valid(v).
void require_valid(const Vertex& v);

// 0 for the root, F_{s+1} + pos - 1 for level s >= 1.
std::uint64_t to_linear(const Vertex& v);
Vertex from_linear(std::uint64_t index);

// Number of vertices on levels 0..max_level, which is F_{max_level + 2}.
std::uint64_t vertex_count(std::uint32_t max_level);

// u <= v iff u == v or u sits on a strictly lower level.
bool leq(const Vertex& u, const Vertex& v);
// v covers u iff v is exactly one level above u.
bool covers(const Vertex& u, const Vertex& v);

// The prototype subposet P_m: levels 0..max_level with all cover edges.
class CobwebTruncation {
 public:
  explicit CobwebTruncation(std::uint32_t max_level);

  std::uint32_t max_level() const { return max_level_; }
  std::uint64_t vertex_count() const { return vertex_count_; }
  // Cover pairs as linear indices, ordered by source then target.
  const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges() const { return edges_; }

  // Linear index range [first, last) of a level.
  std::pair<std::uint64_t, std::uint64_t> level_range(std::uint32_t s) const;
  std::vector<Vertex> level(std::uint32_t s) const;

 private:
  std::uint32_t max_level_;
  std::uint64_t vertex_count_;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges_;
};

CobwebTruncation truncate(std::uint32_t max_level);

// A copy of P_m rooted at `root`: for i = 1..m a subset of level
// root.level + i with level_size(i) elements, positions sorted ascending.
// Inter-level edges are complete, so any such choice is isomorphic to P_m.
struct CobwebCopy {
  Vertex root;
  std::uint32_t m = 0;
  std::vector<std::vector<std::uint64_t>> level_subsets;  // [i - 1] -> positions
};

// prod_{i=1..m} C(level_size(k + i), level_size(i)).
Integer count_copies_rooted(const Vertex& root, std::uint32_t m);

// Every copy in lexicographic order of the level subsets. Throws
// std::length_error if there are more than `limit` copies.
std::vector<CobwebCopy> enumerate_copies(const Vertex& root, std::uint32_t m,
                                         std::uint64_t limit = 1'000'000);

// The copy whose level-i subset is {r, r+1, ..., r + F_i - 1} with
// r = root.pos, i.e. P_m translated onto the root. Throws
// std::out_of_range when a translated position runs off its level.
CobwebCopy shifted_copy(const Vertex& root, std::uint32_t m);

// Graphviz rendering of the Hasse diagram, one rank group per level.
std::string to_dot(const CobwebTruncation& t);

}  // namespace cobweb
