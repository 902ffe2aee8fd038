#pragma once

// Slow reference computations. Each one takes a different route from the
// corresponding library function so the two can be compared.

#include <cstdint>
#include <vector>

#include "cobweb/cobweb_poset.hpp"
#include "cobweb/matrix.hpp"

namespace cobweb::oracle {

using Triangle = std::vector<std::vector<Integer>>;

// F_n by repeated addition.
Integer fib_by_addition(std::uint64_t n);

// Rows 0..n of Pascal's triangle.
Triangle pascal(std::uint64_t n);
// Unsigned Stirling numbers of the first kind c(n, k), rows 0..n.
Triangle stirling1(std::uint64_t n);
// Stirling numbers of the second kind S(n, k), rows 0..n.
Triangle stirling2(std::uint64_t n);

// q-Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], rows 0..n.
Triangle gaussian(std::uint64_t n, std::uint64_t q);

// mu(x, y) = -sum_{x <= z < y} mu(x, z) evaluated on vertices of
// truncate(levels) with leq(), never touching a matrix.
IntMatrix mobius_by_recursion(std::uint32_t levels);

// Number of strict chains x = z_0 < ... < z_t = y, any t, by DFS over leq().
Integer strict_chains_dfs(std::uint32_t levels, std::uint64_t x, std::uint64_t y);

// Leibniz expansion over all permutations. Small matrices only.
Integer leibniz_determinant(const IntMatrix& m);

// Counts level-subset choices of a P_m copy at `root` by walking every
// bitmask of every level. Levels wider than 20 are rejected.
Integer copies_by_bitmask(const Vertex& root, std::uint32_t m);

}  // namespace cobweb::oracle
