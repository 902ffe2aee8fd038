#pragma once

// Incidence-algebra elements of the level-truncated cobweb poset, indexed by
// the linear vertex numbering of cobweb_poset.hpp.

#include <cstdint>

#include "cobweb/cobweb_poset.hpp"
#include "cobweb/matrix.hpp"

namespace cobweb {

// Largest truncation level materialized as a dense matrix (size F_14 = 377).
inline constexpr std::uint32_t kMaxMatrixLevel = 12;

// zeta(x, y) = 1 iff from_linear(x) <= from_linear(y); size F_{levels+2}.
TriangularMatrix zeta_from_order(std::uint32_t levels);

// zeta = zeta1 - zeta0 evaluated literally as Kronecker-delta sums:
//   zeta1(x, y) = sum_{k>=0} delta(x + k, y)
//   zeta0(x, y) = sum_{k>=0} sum_{s>=1} delta(x, F_{s+1} + k)
//                   sum_{1<=r<=F_s-k-1} delta(k + F_{s+1} + r, y)
// No poset structure is consulted.
TriangularMatrix zeta_explicit(std::size_t size);

// mu = zeta^{-1} by back-substitution. Throws std::invalid_argument unless
// `zeta` is unitriangular.
TriangularMatrix mobius(const TriangularMatrix& zeta);

// eta = zeta - delta.
TriangularMatrix eta(const TriangularMatrix& zeta);
TriangularMatrix eta_power(const TriangularMatrix& zeta, std::uint32_t t);

// (eta^length)(x, y): strict chains x = z_0 < z_1 < ... < z_length = y.
Integer chain_count(const TriangularMatrix& zeta, std::size_t x, std::size_t y,
                    std::uint32_t length);

// Sum over every length of chain_count; finite since eta is nilpotent.
Integer chain_count_all(const TriangularMatrix& zeta, std::size_t x, std::size_t y);

// Product of per-step cover matrices from `from_level` to `to_level` inside
// truncate(levels). Rows index the vertices of from_level in position
// order, columns those of to_level. Entry (u, v) counts saturated chains.
IntMatrix maximal_chain_matrix(std::uint32_t levels, std::uint32_t from_level,
                               std::uint32_t to_level);

}  // namespace cobweb
