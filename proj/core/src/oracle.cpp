#include "cobweb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace cobweb::oracle {

Integer fib_by_addition(std::uint64_t n) {
  Integer a = 0;
  Integer b = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    Integer t = a + b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

namespace {

Triangle empty_triangle(std::uint64_t n) {
  Triangle t(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) t[i].assign(i + 1, Integer(0));
  return t;
}

}  // namespace

Triangle pascal(std::uint64_t n) {
  Triangle t = empty_triangle(n);
  for (std::uint64_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    t[i][i] = 1;
    for (std::uint64_t k = 1; k < i; ++k) t[i][k] = t[i - 1][k - 1] + t[i - 1][k];
  }
  return t;
}

Triangle stirling1(std::uint64_t n) {
  Triangle t = empty_triangle(n);
  t[0][0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t k = 1; k <= i; ++k) {
      const Integer same = k < i ? t[i - 1][k] : Integer(0);
      t[i][k] = t[i - 1][k - 1] + Integer(static_cast<unsigned long>(i - 1)) * same;
    }
  }
  return t;
}

Triangle stirling2(std::uint64_t n) {
  Triangle t = empty_triangle(n);
  t[0][0] = 1;
  for (std::uint64_t i = 1; i <= n; ++i) {
    for (std::uint64_t k = 1; k <= i; ++k) {
      const Integer same = k < i ? t[i - 1][k] : Integer(0);
      t[i][k] = t[i - 1][k - 1] + Integer(static_cast<unsigned long>(k)) * same;
    }
  }
  return t;
}

Triangle gaussian(std::uint64_t n, std::uint64_t q) {
  Triangle t = empty_triangle(n);
  for (std::uint64_t i = 0; i <= n; ++i) {
    t[i][0] = 1;
    t[i][i] = 1;
    Integer qk = 1;
    for (std::uint64_t k = 1; k < i; ++k) {
      qk *= static_cast<unsigned long>(q);
      t[i][k] = t[i - 1][k - 1] + qk * t[i - 1][k];
    }
  }
  return t;
}

IntMatrix mobius_by_recursion(std::uint32_t levels) {
  const auto n = vertex_count(levels);
  std::vector<Vertex> vs(n);
  for (std::uint64_t i = 0; i < n; ++i) vs[i] = from_linear(i);

  IntMatrix mu(n, n);
  for (std::uint64_t x = 0; x < n; ++x) {
    // Visit y in an order where every z < y comes first: by level.
    std::vector<std::uint64_t> above;
    for (std::uint64_t y = 0; y < n; ++y) {
      if (leq(vs[x], vs[y])) above.push_back(y);
    }
    std::stable_sort(above.begin(), above.end(),
                     [&](auto a, auto b) { return vs[a].level < vs[b].level; });
    for (auto y : above) {
      if (y == x) {
        mu(x, y) = 1;
        continue;
      }
      Integer s = 0;
      for (auto z : above) {
        if (z != y && leq(vs[z], vs[y])) s += mu(x, z);
      }
      mu(x, y) = -s;
    }
  }
  return mu;
}

namespace {

Integer chains_from(const std::vector<Vertex>& vs, std::uint64_t x, std::uint64_t y) {
  if (x == y) return 1;
  Integer total = 0;
  for (std::uint64_t z = 0; z < vs.size(); ++z) {
    if (z != x && leq(vs[x], vs[z]) && leq(vs[z], vs[y])) total += chains_from(vs, z, y);
  }
  return total;
}

}  // namespace

Integer strict_chains_dfs(std::uint32_t levels, std::uint64_t x, std::uint64_t y) {
  const auto n = vertex_count(levels);
  std::vector<Vertex> vs(n);
  for (std::uint64_t i = 0; i < n; ++i) vs[i] = from_linear(i);
  if (x >= n || y >= n) throw std::out_of_range("strict_chains_dfs: index out of range");
  if (!leq(vs[x], vs[y])) return 0;
  return chains_from(vs, x, y);
}

Integer leibniz_determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("leibniz_determinant: not square");
  const std::size_t n = m.rows();
  if (n > 9) throw std::invalid_argument("leibniz_determinant: too large");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Integer copies_by_bitmask(const Vertex& root, std::uint32_t m) {
  require_valid(root);
  Integer total = 1;
  for (std::uint32_t i = 1; i <= m; ++i) {
    const auto width = level_size(root.level + i);
    const auto want = level_size(i);
    if (width > 20) throw std::invalid_argument("copies_by_bitmask: level too wide");
    unsigned long hits = 0;
    for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
      if (static_cast<std::uint64_t>(std::popcount(mask)) == want) ++hits;
    }
    total *= hits;
  }
  return total;
}

}  // namespace cobweb::oracle
