#pragma once

// Konvalina's generalized binomial coefficients over n boxes, box i holding
// w_i distinct objects.
//
//   first kind   C_k^n(w) = sum_{i_1 <  ... <  i_k} w_{i_1} ... w_{i_k}
//   second kind  S_k^n(w) = sum_{i_1 <= ... <= i_k} w_{i_1} ... w_{i_k}
//
// i.e. the elementary and complete homogeneous symmetric functions of w.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cobweb/fibonacci.hpp"

namespace cobweb {

// Nondecreasing positive weights w_1 <= ... <= w_n.
class WeightVector {
 public:
  // Throws std::invalid_argument on a zero entry or a descent.
  explicit WeightVector(std::vector<std::uint64_t> weights);

  // "1,2,4" -> (1, 2, 4).
  static WeightVector parse(const std::string& csv);

  std::size_t size() const { return weights_.size(); }
  std::uint64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint64_t>& values() const { return weights_; }

 private:
  std::vector<std::uint64_t> weights_;
};

enum class KonvalinaKind { First, Second };

// C_k^n = C_k^{n-1} + w_n C_{k-1}^{n-1}. Rejects k > n.
Integer c_first_kind(const WeightVector& w, std::uint64_t k);

// S_k^n = S_k^{n-1} + w_n S_{k-1}^n. Rejects an empty weight vector.
Integer s_second_kind(const WeightVector& w, std::uint64_t k);

// Literal sum over index tuples. Limited to n, k <= kBruteSumBound.
inline constexpr std::uint64_t kBruteSumBound = 12;
Integer brute_sum(const WeightVector& w, std::uint64_t k, KonvalinaKind kind);

enum class WeightFamily { Uniform, Geometric, Arithmetic };

// uniform (1, ..., 1); geometric (1, q, ..., q^{n-1}); arithmetic (1, ..., n).
WeightVector specialize(WeightFamily family, std::uint64_t n, std::uint64_t q = 2);

// prod_{i=1..k} (q^{n-k+i} - 1) / (q^i - 1). Requires q >= 2.
Integer gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);

// Bounded search for a single weight sequence whose prefixes reproduce
// fibonomials: C_k^n(w) = (n over k)_F for the first kind, or
// S_k^n(w) = (n+k-1 over k)_F for the second, for every n up to the prefix
// length and every admissible k <= max_k.
struct WeightSearchResult {
  KonvalinaKind kind = KonvalinaKind::First;
  std::uint64_t max_length = 0;
  std::uint64_t max_entry = 0;
  std::uint64_t longest_prefix = 0;
  std::vector<std::uint64_t> witness;  // one prefix attaining longest_prefix
};

WeightSearchResult search_fibonomial_weights(KonvalinaKind kind, std::uint64_t max_length,
                                             std::uint64_t max_entry, std::uint64_t max_k = 4);

}  // namespace cobweb
