#pragma once

// Maximal-chain counts in the cobweb poset and the reading of fibonomial
// coefficients as numbers of copies of the prototype subposet P_m.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cobweb/cobweb_poset.hpp"

namespace cobweb {

// Default bound on the level reached by the brute-force chain enumerator:
// 8_F! = 65520 chains from the root. COBWEB_ORACLE_MAX overrides it.
inline constexpr std::uint32_t kDefaultOracleMaxLevel = 8;
std::uint32_t oracle_max_level();

// Saturated chains from the root to level n: n_F!.
Integer max_chains_from_root(std::uint32_t n);

// Saturated chains from one fixed level-k vertex to level n: n_F^(n-k).
Integer max_chains_from_fixed(std::uint32_t k, std::uint32_t n);

// All saturated chains from level k to level n: F_k * n_F^(n-k). k >= 1.
Integer max_chains_level_to_level(std::uint32_t k, std::uint32_t n);

// max_chains_from_fixed(k, n) / (n-k)_F!, the number of P_{n-k} copies per
// fixed root when the chains split evenly among copies.
Integer fibonomial_via_chains(std::uint32_t n, std::uint32_t k);

struct ChainCountReport {
  std::uint32_t from_level = 0;
  std::uint32_t to_level = 0;
  Integer per_source;
  Integer total;       // level_size(from_level) * per_source
  Integer fibonomial;  // (to_level over from_level)_F
};

ChainCountReport chain_count_report(std::uint32_t k, std::uint32_t n);

// Number of max-disjoint copies of P_{n-k} rooted at level k and ending at
// level n, as level factor F_k times (n over k)_F.
struct CopyCountReport {
  std::uint32_t k = 0;
  std::uint32_t n = 0;
  Integer level_factor;
  Integer fibonomial;
  Integer total;
  // At k = 1 the level factor F_1 coincides with F_2 and the copy reading
  // no longer counts anything real.
  bool degenerate = false;
};

CopyCountReport copy_count(std::uint32_t k, std::uint32_t n);

struct DegeneracyReport {
  std::uint32_t n = 0;
  Integer value;  // (n over 1)_F = F_n
  bool f1_equals_f2 = false;
  bool flagged = false;
};

DegeneracyReport check_k1_degeneracy(std::uint32_t n);

// The two summands of (n+1 over k)_F = F_{k+1} (n over k)_F + F_{n-k} (n over k-1)_F.
std::pair<Integer, Integer> recurrence_class_split(std::uint32_t n, std::uint32_t k);

// Depth-first enumeration of saturated chains in truncate(n) from level k
// to level n, starting at `source` or at every level-k vertex when empty.
// Each chain is walked individually, so the cost is the count itself.
Integer brute_force_max_chains(std::uint32_t k, std::uint32_t n,
                               std::optional<Vertex> source = std::nullopt);

// Greedily collects copies of P_m rooted at `root` whose maximal-chain sets
// are pairwise disjoint, scanning enumerate_copies order. This exhibits one
// chain-disjoint family; it does not search for a largest one.
std::vector<CobwebCopy> greedy_disjoint_copies(const Vertex& root, std::uint32_t m,
                                               std::uint64_t limit = 200'000);

// Copies share a maximal chain iff their level subsets meet on every level.
bool chain_disjoint(const CobwebCopy& a, const CobwebCopy& b);

}  // namespace cobweb
