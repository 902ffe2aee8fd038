#include "cobweb/incidence_algebra.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cobweb {

namespace {

void require_matrix_level(std::uint32_t levels) {
  if (levels > kMaxMatrixLevel) {
    throw std::invalid_argument("dense incidence matrices are limited to " +
                                std::to_string(kMaxMatrixLevel) + " levels, got " +
                                std::to_string(levels));
  }
}

}  // namespace

TriangularMatrix zeta_from_order(std::uint32_t levels) {
  require_matrix_level(levels);
  const auto n = vertex_count(levels);
  std::vector<Vertex> vs(n);
  for (std::uint64_t i = 0; i < n; ++i) vs[i] = from_linear(i);

  TriangularMatrix z(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = x; y < n; ++y) {
      if (leq(vs[x], vs[y])) z.set(x, y, 1);
    }
  }
  return z;
}

TriangularMatrix zeta_explicit(std::size_t size) {
  // F_s for every s whose level can start inside [0, size).
  std::vector<std::int64_t> f{0, 1};
  while (f.back() <= static_cast<std::int64_t>(size) + 1) f.push_back(f[f.size() - 1] + f[f.size() - 2]);
  const auto n = static_cast<std::int64_t>(size);

  IntMatrix zeta1(size, size);
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t k = 0; x + k < n; ++k) zeta1(x, x + k) += 1;
  }

  IntMatrix zeta0(size, size);
  for (std::size_t s = 1; s + 1 < f.size(); ++s) {
    const std::int64_t base = f[s + 1];
    for (std::int64_t k = 0; base + k < n; ++k) {
      const std::int64_t x = base + k;
      for (std::int64_t r = 1; r <= f[s] - k - 1; ++r) {
        const std::int64_t y = k + base + r;
        if (y < n) zeta0(x, y) += 1;
      }
    }
  }

  IntMatrix z(size, size);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) z(x, y) = zeta1(x, y) - zeta0(x, y);
  }
  return TriangularMatrix(std::move(z));
}

TriangularMatrix mobius(const TriangularMatrix& zeta) {
  if (!zeta.is_unitriangular()) throw std::invalid_argument("mobius: input is not unitriangular");
  const std::size_t n = zeta.size();
  TriangularMatrix mu(n);
  Integer acc;
  // Row by row: mu(i, j) = -sum_{i <= k < j} mu(i, k) zeta(k, j).
  for (std::size_t i = 0; i < n; ++i) {
    mu.set(i, i, 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      acc = 0;
      for (std::size_t k = i; k < j; ++k) {
        if (mu(i, k) != 0 && zeta(k, j) != 0) acc += mu(i, k) * zeta(k, j);
      }
      if (acc != 0) mu.set(i, j, -acc);
    }
  }
  return mu;
}

TriangularMatrix eta(const TriangularMatrix& zeta) {
  return zeta - TriangularMatrix::identity(zeta.size());
}

TriangularMatrix eta_power(const TriangularMatrix& zeta, std::uint32_t t) {
  const TriangularMatrix e = eta(zeta);
  TriangularMatrix out = TriangularMatrix::identity(zeta.size());
  for (std::uint32_t i = 0; i < t; ++i) out = out * e;
  return out;
}

namespace {

// Row vector e_x * eta^t for t = 0, 1, ... until it vanishes.
template <class Visit>
void walk_eta_rows(const TriangularMatrix& zeta, std::size_t x, Visit&& visit) {
  const std::size_t n = zeta.size();
  if (x >= n) throw std::out_of_range("chain_count: index out of range");
  std::vector<Integer> row(n);
  row[x] = 1;
  for (std::uint32_t t = 0;; ++t) {
    if (!visit(t, row)) return;
    std::vector<Integer> next(n);
    bool any = false;
    for (std::size_t k = x; k < n; ++k) {
      if (row[k] == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (zeta(k, j) != 0) {
          next[j] += row[k] * zeta(k, j);
          any = true;
        }
      }
    }
    if (!any) {
      visit(t + 1, next);
      return;
    }
    row = std::move(next);
  }
}

}  // namespace

Integer chain_count(const TriangularMatrix& zeta, std::size_t x, std::size_t y,
                    std::uint32_t length) {
  if (y >= zeta.size()) throw std::out_of_range("chain_count: index out of range");
  Integer out = 0;
  walk_eta_rows(zeta, x, [&](std::uint32_t t, const std::vector<Integer>& row) {
    if (t == length) {
      out = row[y];
      return false;
    }
    return true;
  });
  return out;
}

Integer chain_count_all(const TriangularMatrix& zeta, std::size_t x, std::size_t y) {
  if (y >= zeta.size()) throw std::out_of_range("chain_count: index out of range");
  Integer out = 0;
  walk_eta_rows(zeta, x, [&](std::uint32_t, const std::vector<Integer>& row) {
    out += row[y];
    return true;
  });
  return out;
}

IntMatrix maximal_chain_matrix(std::uint32_t levels, std::uint32_t from_level,
                               std::uint32_t to_level) {
  if (from_level > to_level || to_level > levels) {
    throw std::invalid_argument("maximal_chain_matrix: need from_level <= to_level <= levels");
  }
  IntMatrix acc = IntMatrix::identity(level_size(from_level));
  for (std::uint32_t s = from_level; s < to_level; ++s) {
    const auto rows = level_size(s);
    const auto cols = level_size(s + 1);
    IntMatrix step(rows, cols);
    for (std::uint64_t u = 0; u < rows; ++u) {
      for (std::uint64_t v = 0; v < cols; ++v) {
        if (covers(Vertex{.level = s, .pos = u + 1}, Vertex{.level = s + 1, .pos = v + 1})) {
          step(u, v) = 1;
        }
      }
    }
    acc = acc * step;
  }
  return acc;
}

}  // namespace cobweb
