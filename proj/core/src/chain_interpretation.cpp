#include "cobweb/chain_interpretation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace cobweb {

namespace {

void require_ordered(std::uint32_t k, std::uint32_t n, const char* what) {
  if (k > n) {
    throw std::invalid_argument(std::string(what) + ": k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
}

}  // namespace

std::uint32_t oracle_max_level() {
  const char* env = std::getenv("COBWEB_ORACLE_MAX");
  if (env == nullptr || *env == '\0') return kDefaultOracleMaxLevel;
  char* end = nullptr;
  const unsigned long v = std::strtoul(env, &end, 10);
  if (end == env || *end != '\0' || v > kMaxLevel) {
    throw std::invalid_argument(std::string("COBWEB_ORACLE_MAX is not a level: ") + env);
  }
  return static_cast<std::uint32_t>(v);
}

Integer max_chains_from_root(std::uint32_t n) {
  return psi_factorial(PsiSequence::fibonacci(), n);
}

Integer max_chains_from_fixed(std::uint32_t k, std::uint32_t n) {
  require_ordered(k, n, "max_chains_from_fixed");
  return psi_falling(PsiSequence::fibonacci(), n, n - k);
}

Integer max_chains_level_to_level(std::uint32_t k, std::uint32_t n) {
  if (k == 0) {
    throw std::invalid_argument("max_chains_level_to_level: k = 0, use max_chains_from_root");
  }
  require_ordered(k, n, "max_chains_level_to_level");
  return Integer(static_cast<unsigned long>(level_size(k))) * max_chains_from_fixed(k, n);
}

Integer fibonomial_via_chains(std::uint32_t n, std::uint32_t k) {
  require_ordered(k, n, "fibonomial_via_chains");
  return exact_div(max_chains_from_fixed(k, n), max_chains_from_root(n - k),
                   "fibonomial_via_chains");
}

ChainCountReport chain_count_report(std::uint32_t k, std::uint32_t n) {
  require_ordered(k, n, "chain_count_report");
  ChainCountReport r;
  r.from_level = k;
  r.to_level = n;
  r.per_source = max_chains_from_fixed(k, n);
  r.total = Integer(static_cast<unsigned long>(level_size(k))) * r.per_source;
  r.fibonomial = fibonomial_def(n, k);
  return r;
}

CopyCountReport copy_count(std::uint32_t k, std::uint32_t n) {
  require_ordered(k, n, "copy_count");
  CopyCountReport r;
  r.k = k;
  r.n = n;
  r.level_factor = static_cast<unsigned long>(level_size(k));
  r.fibonomial = fibonomial_via_chains(n, k);
  r.total = r.level_factor * r.fibonomial;
  r.degenerate = (k == 1);
  return r;
}

DegeneracyReport check_k1_degeneracy(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("check_k1_degeneracy: need n >= 2");
  DegeneracyReport r;
  r.n = n;
  r.value = fibonomial_def(n, 1);
  r.f1_equals_f2 = fib(1) == fib(2);
  r.flagged = r.f1_equals_f2;
  return r;
}

std::pair<Integer, Integer> recurrence_class_split(std::uint32_t n, std::uint32_t k) {
  if (k == 0 || k > n) {
    throw std::invalid_argument("recurrence_class_split: need 1 <= k <= n, got k = " +
                                std::to_string(k) + ", n = " + std::to_string(n));
  }
  return {fib(k + 1) * fibonomial_def(n, k), fib(n - k) * fibonomial_def(n, k - 1)};
}

namespace {

struct ChainWalker {
  std::vector<std::vector<std::uint64_t>> up;  // cover successors per linear index
  std::uint32_t target_level;

  // Counts one per saturated chain; iterative to keep deep levels off the stack.
  Integer count_from(std::uint64_t start) const {
    Integer total = 0;
    std::vector<std::pair<std::uint64_t, std::size_t>> stack{{start, 0}};
    while (!stack.empty()) {
      auto& [node, next_child] = stack.back();
      if (from_linear(node).level == target_level) {
        total += 1;
        stack.pop_back();
        continue;
      }
      if (next_child == up[node].size()) {
        stack.pop_back();
        continue;
      }
      const auto child = up[node][next_child++];
      stack.emplace_back(child, 0);
    }
    return total;
  }
};

}  // namespace

Integer brute_force_max_chains(std::uint32_t k, std::uint32_t n, std::optional<Vertex> source) {
  require_ordered(k, n, "brute_force_max_chains");
  const auto bound = oracle_max_level();
  if (n > bound) {
    throw std::invalid_argument("brute_force_max_chains: level " + std::to_string(n) +
                                " exceeds oracle bound " + std::to_string(bound));
  }
  if (source) {
    require_valid(*source);
    if (source->level != k) {
      throw std::invalid_argument("brute_force_max_chains: source " + to_string(*source) +
                                  " is not on level " + std::to_string(k));
    }
  }

  const auto t = truncate(n);
  ChainWalker walker{std::vector<std::vector<std::uint64_t>>(t.vertex_count()), n};
  for (const auto& [u, v] : t.edges()) walker.up[u].push_back(v);

  if (source) return walker.count_from(to_linear(*source));
  Integer total = 0;
  const auto [first, last] = t.level_range(k);
  for (auto i = first; i < last; ++i) total += walker.count_from(i);
  return total;
}

bool chain_disjoint(const CobwebCopy& a, const CobwebCopy& b) {
  if (a.root != b.root || a.m != b.m) return true;
  for (std::uint32_t i = 0; i < a.m; ++i) {
    const auto& x = a.level_subsets[i];
    const auto& y = b.level_subsets[i];
    std::vector<std::uint64_t> common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(common));
    if (common.empty()) return true;
  }
  return false;
}

std::vector<CobwebCopy> greedy_disjoint_copies(const Vertex& root, std::uint32_t m,
                                               std::uint64_t limit) {
  std::vector<CobwebCopy> chosen;
  for (auto& candidate : enumerate_copies(root, m, limit)) {
    const bool fits = std::all_of(chosen.begin(), chosen.end(), [&](const CobwebCopy& c) {
      return chain_disjoint(c, candidate);
    });
    if (fits) chosen.push_back(std::move(candidate));
  }
  return chosen;
}

}  // namespace cobweb
