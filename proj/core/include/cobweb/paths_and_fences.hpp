#pragma once

// Two further roads to Fibonacci-type numbers: binomial determinants whose
// sum over index subsets is a fibonomial (the nonintersecting-path count at
// q = 1), and order ideals of the zigzag fence poset.

#include <cstdint>
#include <functional>
#include <vector>

#include "cobweb/fibonacci.hpp"
#include "cobweb/matrix.hpp"

namespace cobweb {

// r_1 < r_2 < ... < r_k drawn from {0, ..., n}.
class IndexSubset {
 public:
  // Throws std::invalid_argument unless strictly increasing and <= n.
  IndexSubset(std::vector<std::uint64_t> r, std::uint64_t n);

  std::size_t size() const { return r_.size(); }
  std::uint64_t n() const { return n_; }
  std::uint64_t operator[](std::size_t i) const { return r_[i]; }
  const std::vector<std::uint64_t>& values() const { return r_; }

 private:
  std::vector<std::uint64_t> r_;
  std::uint64_t n_;
};

// M[i][j] = C(r_i, n - r_{k+1-j}) with 1-based i, j.
IntMatrix path_matrix(const IndexSubset& r);

// Exact determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntMatrix& m);

// det path_matrix(r): the number N(R) of nonintersecting k-paths.
Integer path_determinant(const IndexSubset& r);

inline constexpr std::uint64_t kMaxGvN = 14;

// Sum of path_determinant over all k-subsets of {0, ..., N-1}; equals
// (N over k)_F. The optional visitor sees every subset with its value.
Integer fibonomial_via_gv(
    std::uint64_t big_n, std::uint64_t k,
    const std::function<void(const IndexSubset&, const Integer&)>& visit = {});

enum class FenceOrientation {
  // x_1 < x_2 > x_3 < x_4 ...
  UpFirst,
  // x_1 > x_2 < x_3 > x_4 ...
  DownFirst,
};

class FencePoset {
 public:
  explicit FencePoset(std::uint32_t n, FenceOrientation orientation = FenceOrientation::UpFirst);

  std::uint32_t size() const { return n_; }
  FenceOrientation orientation() const { return orientation_; }

  // Cover pairs (lower, upper), 0-based, one per adjacent pair.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers() const { return covers_; }

  // Whether x_{i+1} lies above x_i.
  bool rises(std::uint32_t i) const;

 private:
  std::uint32_t n_;
  FenceOrientation orientation_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> covers_;
};

inline constexpr std::uint32_t kMaxFenceBrute = 25;

// Every subset is tested for being a down-set. n <= kMaxFenceBrute.
Integer fence_ideals_brute(const FencePoset& fence);

// Left-to-right transfer over (x_i in ideal?) states; any n.
Integer fence_ideals_transfer(const FencePoset& fence);

Integer fence_ideals(std::uint32_t n);

enum class BeckForm { First, Second };

// First:  F(n) = F(k) F(n+1-k) + F(k-1) F(n-k)
// Second: the first with k replaced by k - 1.
bool beck_identity(std::uint64_t n, std::uint64_t k, BeckForm form);

}  // namespace cobweb
