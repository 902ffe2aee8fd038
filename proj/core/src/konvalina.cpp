#include "cobweb/konvalina.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cobweb {

WeightVector::WeightVector(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] == 0) {
      throw std::invalid_argument("weight w_" + std::to_string(i + 1) + " must be positive");
    }
    if (i > 0 && weights_[i] < weights_[i - 1]) {
      throw std::invalid_argument("weights must be nondecreasing: w_" + std::to_string(i) + " = " +
                                  std::to_string(weights_[i - 1]) + " > w_" +
                                  std::to_string(i + 1) + " = " + std::to_string(weights_[i]));
    }
  }
}

WeightVector WeightVector::parse(const std::string& csv) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    item = first == std::string::npos ? std::string() : item.substr(first, last - first + 1);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad weight '" + item + "'");
    }
    if (used != item.size() || item.front() == '-' || item.front() == '+') throw std::invalid_argument("bad weight '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty weight list");
  return WeightVector(std::move(out));
}

Integer c_first_kind(const WeightVector& w, std::uint64_t k) {
  const auto n = w.size();
  if (k > n) {
    throw std::invalid_argument("c_first_kind: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n));
  }
  // row[j] holds C_j^i after processing boxes 1..i.
  std::vector<Integer> row(k + 1);
  row[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer wi = static_cast<unsigned long>(w[i]);
    for (std::size_t j = std::min<std::size_t>(k, i + 1); j >= 1; --j) row[j] += wi * row[j - 1];
  }
  return row[k];
}

Integer s_second_kind(const WeightVector& w, std::uint64_t k) {
  const auto n = w.size();
  if (n == 0) throw std::invalid_argument("s_second_kind: needs at least one box");
  // row[j] holds S_j^i; ascending j so row[j - 1] is already S_{j-1}^i.
  std::vector<Integer> row(k + 1);
  row[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer wi = static_cast<unsigned long>(w[i]);
    for (std::size_t j = 1; j <= k; ++j) row[j] += wi * row[j - 1];
  }
  return row[k];
}

Integer brute_sum(const WeightVector& w, std::uint64_t k, KonvalinaKind kind) {
  const auto n = w.size();
  if (n > kBruteSumBound || k > kBruteSumBound) {
    throw std::invalid_argument("brute_sum: n and k must not exceed " + std::to_string(kBruteSumBound));
  }
  if (kind == KonvalinaKind::First && k > n) {
    throw std::invalid_argument("brute_sum: first kind needs k <= n");
  }
  if (n == 0) return k == 0 ? 1 : 0;

  // Walk every index tuple i_1 (<|<=) ... (<|<=) i_k explicitly.
  Integer total = 0;
  const bool strict = kind == KonvalinaKind::First;
  std::function<void(std::size_t, std::size_t, const Integer&)> rec =
      [&](std::size_t depth, std::size_t lowest, const Integer& product) {
        if (depth == k) {
          total += product;
          return;
        }
        for (std::size_t i = lowest; i < n; ++i) {
          rec(depth + 1, strict ? i + 1 : i, product * static_cast<unsigned long>(w[i]));
        }
      };
  rec(0, 0, Integer(1));
  return total;
}

WeightVector specialize(WeightFamily family, std::uint64_t n, std::uint64_t q) {
  std::vector<std::uint64_t> w(n);
  switch (family) {
    case WeightFamily::Uniform:
      std::fill(w.begin(), w.end(), 1);
      break;
    case WeightFamily::Geometric: {
      if (q < 1) throw std::invalid_argument("geometric weights need q >= 1");
      std::uint64_t p = 1;
      for (std::uint64_t i = 0; i < n; ++i) {
        w[i] = p;
        if (i + 1 < n && p > UINT64_MAX / q) throw std::overflow_error("geometric weight overflows");
        p *= q;
      }
      break;
    }
    case WeightFamily::Arithmetic:
      for (std::uint64_t i = 0; i < n; ++i) w[i] = i + 1;
      break;
  }
  return WeightVector(std::move(w));
}

Integer gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) {
    throw std::invalid_argument("gaussian_binomial: k = " + std::to_string(k) + " exceeds n = " +
                                std::to_string(n));
  }
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q must be at least 2");
  auto q_pow_minus_one = [q](std::uint64_t e) {
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), q, e);
    return Integer(p - 1);
  };
  Integer num = 1;
  Integer den = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    num *= q_pow_minus_one(n - k + i);
    den *= q_pow_minus_one(i);
  }
  return exact_div(num, den, "gaussian_binomial");
}

namespace {

bool prefix_matches(KonvalinaKind kind, const std::vector<std::uint64_t>& w, std::uint64_t max_k) {
  const WeightVector wv(w);
  const std::uint64_t n = w.size();
  if (kind == KonvalinaKind::First) {
    for (std::uint64_t k = 0; k <= std::min(n, max_k); ++k) {
      if (c_first_kind(wv, k) != fibonomial_def(n, k)) return false;
    }
  } else {
    for (std::uint64_t k = 0; k <= max_k; ++k) {
      if (s_second_kind(wv, k) != fibonomial_def(n + k - 1, k)) return false;
    }
  }
  return true;
}

}  // namespace

WeightSearchResult search_fibonomial_weights(KonvalinaKind kind, std::uint64_t max_length,
                                             std::uint64_t max_entry, std::uint64_t max_k) {
  WeightSearchResult result{kind, max_length, max_entry, 0, {}};
  std::vector<std::uint64_t> w;
  // Prefix-closed: a sequence only extends if every shorter prefix matched.
  std::function<void()> extend = [&] {
    if (w.size() > result.longest_prefix) {
      result.longest_prefix = w.size();
      result.witness = w;
    }
    if (w.size() == max_length) return;
    const std::uint64_t lo = w.empty() ? 1 : w.back();
    for (std::uint64_t v = lo; v <= max_entry; ++v) {
      w.push_back(v);
      if (prefix_matches(kind, w, max_k)) extend();
      w.pop_back();
    }
  };
  extend();
  return result;
}

}  // namespace cobweb
