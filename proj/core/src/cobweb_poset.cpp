#include "cobweb/cobweb_poset.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cobweb {

namespace {

// F_0..F_{kMaxLevel + 2}, all below 2^64.
const std::vector<std::uint64_t>& fib_table() {
  static const std::vector<std::uint64_t> table = [] {
    std::vector<std::uint64_t> f(kMaxLevel + 3);
    f[0] = 0;
    f[1] = 1;
    for (std::size_t i = 2; i < f.size(); ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
  }();
  return table;
}

void require_level(std::uint32_t s) {
  if (s > kMaxLevel) {
    throw std::out_of_range("level " + std::to_string(s) + " exceeds supported maximum " +
                            std::to_string(kMaxLevel));
  }
}

}  // namespace

std::string to_string(const Vertex& v) {
  return "<" + std::to_string(v.pos) + "," + std::to_string(v.level) + ">";
}

std::uint64_t level_size(std::uint32_t s) {
  require_level(s);
  return s == 0 ? 1 : fib_table()[s];
}

bool is_valid(const Vertex& v) {
  return v.level <= kMaxLevel && v.pos >= 1 && v.pos <= level_size(v.level);
}

void require_valid(const Vertex& v) {
  if (!is_valid(v)) throw std::invalid_argument("invalid vertex " + to_string(v));
}

std::uint64_t to_linear(const Vertex& v) {
  require_valid(v);
  if (v.level == 0) return 0;
  return fib_table()[v.level + 1] + v.pos - 1;
}

Vertex from_linear(std::uint64_t index) {
  if (index == 0) return kRoot;
  const auto& f = fib_table();
  // Level s >= 1 occupies [F_{s+1}, F_{s+2}).
  for (std::uint32_t s = 1; s <= kMaxLevel; ++s) {
    if (index < f[s + 2]) return Vertex{.level = s, .pos = index - f[s + 1] + 1};
  }
  throw std::out_of_range("linear index " + std::to_string(index) + " out of range");
}

std::uint64_t vertex_count(std::uint32_t max_level) {
  require_level(max_level);
  return fib_table()[max_level + 2];
}

bool leq(const Vertex& u, const Vertex& v) { return u == v || u.level < v.level; }

bool covers(const Vertex& u, const Vertex& v) { return v.level == u.level + 1; }

CobwebTruncation::CobwebTruncation(std::uint32_t max_level)
    : max_level_(max_level), vertex_count_(cobweb::vertex_count(max_level)) {
  std::uint64_t edge_total = 0;
  for (std::uint32_t s = 0; s < max_level; ++s) edge_total += level_size(s) * level_size(s + 1);
  edges_.reserve(edge_total);
  for (std::uint32_t s = 0; s < max_level; ++s) {
    const auto [lo_first, lo_last] = level_range(s);
    const auto [hi_first, hi_last] = level_range(s + 1);
    for (auto u = lo_first; u < lo_last; ++u) {
      for (auto v = hi_first; v < hi_last; ++v) edges_.emplace_back(u, v);
    }
  }
}

std::pair<std::uint64_t, std::uint64_t> CobwebTruncation::level_range(std::uint32_t s) const {
  if (s > max_level_) throw std::out_of_range("level beyond truncation");
  const auto first = to_linear(Vertex{.level = s, .pos = 1});
  return {first, first + level_size(s)};
}

std::vector<Vertex> CobwebTruncation::level(std::uint32_t s) const {
  if (s > max_level_) throw std::out_of_range("level beyond truncation");
  std::vector<Vertex> out;
  out.reserve(level_size(s));
  for (std::uint64_t j = 1; j <= level_size(s); ++j) out.push_back({.level = s, .pos = j});
  return out;
}

CobwebTruncation truncate(std::uint32_t max_level) { return CobwebTruncation(max_level); }

Integer count_copies_rooted(const Vertex& root, std::uint32_t m) {
  require_valid(root);
  Integer out = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    out *= binomial(static_cast<std::int64_t>(level_size(root.level + i)),
                    static_cast<std::int64_t>(level_size(i)));
  }
  return out;
}

namespace {

// Advances a sorted k-subset of {1..n} to its lexicographic successor.
bool next_combination(std::vector<std::uint64_t>& c, std::uint64_t n) {
  const auto k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - (k - 1 - i)) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::uint64_t> first_combination(std::uint64_t k) {
  std::vector<std::uint64_t> c(k);
  for (std::uint64_t i = 0; i < k; ++i) c[i] = i + 1;
  return c;
}

}  // namespace

std::vector<CobwebCopy> enumerate_copies(const Vertex& root, std::uint32_t m,
                                         std::uint64_t limit) {
  const Integer total = count_copies_rooted(root, m);
  if (total > Integer(static_cast<unsigned long>(limit))) {
    throw std::length_error("enumerate_copies: " + total.get_str() + " copies exceed limit " +
                            std::to_string(limit));
  }

  CobwebCopy current{.root = root, .m = m, .level_subsets = {}};
  for (std::uint32_t i = 1; i <= m; ++i) current.level_subsets.push_back(first_combination(level_size(i)));

  std::vector<CobwebCopy> out;
  out.reserve(total.get_ui());
  while (true) {
    out.push_back(current);
    // Odometer over levels, innermost (highest) level fastest.
    std::uint32_t i = m;
    while (i > 0) {
      auto& subset = current.level_subsets[i - 1];
      if (next_combination(subset, level_size(root.level + i))) break;
      subset = first_combination(level_size(i));
      --i;
    }
    if (i == 0) break;
  }
  return out;
}

CobwebCopy shifted_copy(const Vertex& root, std::uint32_t m) {
  require_valid(root);
  CobwebCopy out{.root = root, .m = m, .level_subsets = {}};
  for (std::uint32_t i = 1; i <= m; ++i) {
    const auto width = level_size(i);
    const auto top = level_size(root.level + i);
    if (root.pos + width - 1 > top) {
      throw std::out_of_range("shifted copy of P_" + std::to_string(m) + " at " + to_string(root) +
                              " leaves level " + std::to_string(root.level + i));
    }
    std::vector<std::uint64_t> subset(width);
    for (std::uint64_t j = 0; j < width; ++j) subset[j] = root.pos + j;
    out.level_subsets.push_back(std::move(subset));
  }
  return out;
}

std::string to_dot(const CobwebTruncation& t) {
  std::ostringstream os;
  os << "digraph cobweb {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle, fontsize=10];\n";
  for (std::uint32_t s = 0; s <= t.max_level(); ++s) {
    os << "  { rank=same;";
    const auto [first, last] = t.level_range(s);
    for (auto i = first; i < last; ++i) {
      const Vertex v = from_linear(i);
      os << " v" << i << " [label=\"(" << v.pos << "," << v.level << ")\"];";
    }
    os << " }\n";
  }
  for (const auto& [u, v] : t.edges()) os << "  v" << u << " -> v" << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cobweb
