#include "cobweb/paths_and_fences.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cobweb {

IndexSubset::IndexSubset(std::vector<std::uint64_t> r, std::uint64_t n) : r_(std::move(r)), n_(n) {
  for (std::size_t i = 0; i < r_.size(); ++i) {
    if (r_[i] > n_) {
      throw std::invalid_argument("index " + std::to_string(r_[i]) + " outside {0.." +
                                  std::to_string(n_) + "}");
    }
    if (i > 0 && r_[i] <= r_[i - 1]) throw std::invalid_argument("index subset must be strictly increasing");
  }
}

IntMatrix path_matrix(const IndexSubset& r) {
  const auto k = r.size();
  const auto n = static_cast<std::int64_t>(r.n());
  IntMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      m(i, j) = binomial(static_cast<std::int64_t>(r[i]), n - static_cast<std::int64_t>(r[k - 1 - j]));
    }
  }
  return m;
}

Integer determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Integer sign = 1;
  Integer prev_pivot = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev_pivot, "bareiss");
      }
      a(i, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer path_determinant(const IndexSubset& r) { return determinant(path_matrix(r)); }

Integer fibonomial_via_gv(std::uint64_t big_n, std::uint64_t k,
                          const std::function<void(const IndexSubset&, const Integer&)>& visit) {
  if (k > big_n) {
    throw std::invalid_argument("fibonomial_via_gv: k = " + std::to_string(k) + " exceeds N = " +
                                std::to_string(big_n));
  }
  if (big_n > kMaxGvN) {
    throw std::invalid_argument("fibonomial_via_gv: N = " + std::to_string(big_n) +
                                " exceeds bound " + std::to_string(kMaxGvN));
  }
  // Subsets of {0, ..., n} with n = N - 1; for N = 0 the ground set is empty.
  const std::uint64_t ground = big_n;
  const std::uint64_t n = big_n == 0 ? 0 : big_n - 1;

  Integer total = 0;
  std::vector<std::uint64_t> r(k);
  for (std::uint64_t i = 0; i < k; ++i) r[i] = i;
  while (true) {
    const IndexSubset subset(r, n);
    const Integer value = path_determinant(subset);
    if (visit) visit(subset, value);
    total += value;

    std::size_t i = k;
    while (i > 0 && r[i - 1] == ground - k + (i - 1)) --i;
    if (i == 0) break;
    ++r[i - 1];
    for (std::size_t j = i; j < k; ++j) r[j] = r[j - 1] + 1;
  }
  return total;
}

FencePoset::FencePoset(std::uint32_t n, FenceOrientation orientation)
    : n_(n), orientation_(orientation) {
  if (n == 0) throw std::invalid_argument("fence needs at least one element");
  for (std::uint32_t i = 0; i + 1 < n; ++i) {
    if (rises(i)) {
      covers_.emplace_back(i, i + 1);
    } else {
      covers_.emplace_back(i + 1, i);
    }
  }
}

bool FencePoset::rises(std::uint32_t i) const {
  const bool even = i % 2 == 0;
  return orientation_ == FenceOrientation::UpFirst ? even : !even;
}

Integer fence_ideals_brute(const FencePoset& fence) {
  const auto n = fence.size();
  if (n > kMaxFenceBrute) {
    throw std::invalid_argument("fence_ideals_brute: n = " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxFenceBrute));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> masks;
  for (const auto& [lo, hi] : fence.covers()) masks.emplace_back(1u << lo, 1u << hi);

  unsigned long count = 0;
  const std::uint32_t limit = 1u << n;
  for (std::uint32_t s = 0; s < limit; ++s) {
    bool down_closed = true;
    for (const auto& [lo, hi] : masks) {
      if ((s & hi) && !(s & lo)) {
        down_closed = false;
        break;
      }
    }
    if (down_closed) ++count;
  }
  return Integer(count);
}

Integer fence_ideals_transfer(const FencePoset& fence) {
  // out/in: ideals of x_1..x_i with x_i excluded / included.
  Integer out = 1;
  Integer in = 1;
  for (std::uint32_t i = 0; i + 1 < fence.size(); ++i) {
    Integer next_out;
    Integer next_in;
    if (fence.rises(i)) {
      // x_i < x_{i+1}: x_{i+1} in the ideal forces x_i in.
      next_out = out + in;
      next_in = in;
    } else {
      // x_i > x_{i+1}: x_i in the ideal forces x_{i+1} in.
      next_out = out;
      next_in = out + in;
    }
    out = std::move(next_out);
    in = std::move(next_in);
  }
  return out + in;
}

Integer fence_ideals(std::uint32_t n) { return fence_ideals_transfer(FencePoset(n)); }

bool beck_identity(std::uint64_t n, std::uint64_t k, BeckForm form) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("beck_identity: need 1 <= k <= n, got k = " + std::to_string(k) +
                                ", n = " + std::to_string(n));
  }
  const auto nn = static_cast<std::int64_t>(n);
  const auto kk = static_cast<std::int64_t>(form == BeckForm::First ? k : k - 1);
  const Integer rhs = fib_signed(kk) * fib_signed(nn + 1 - kk) + fib_signed(kk - 1) * fib_signed(nn - kk);
  return fib(n) == rhs;
}

}  // namespace cobweb
