#include "cobweb/fibonacci.hpp"

#include <string>

namespace cobweb {

Integer exact_div(const Integer& num, const Integer& den, const char* what) {
  if (den == 0) {
    throw InexactDivision(std::string(what) + ": division by zero");
  }
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw InexactDivision(std::string(what) + ": " + num.get_str() + " / " +
                          den.get_str() + " leaves remainder " + r.get_str());
  }
  return q;
}

Integer fib(std::uint64_t n) {
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

Integer fib_signed(std::int64_t n) {
  if (n >= 0) return fib(static_cast<std::uint64_t>(n));
  const auto m = static_cast<std::uint64_t>(-n);
  Integer f = fib(m);
  return (m % 2 == 0) ? Integer(-f) : f;
}

PsiSequence PsiSequence::fibonacci() {
  return {[](std::uint64_t n) { return fib(n); }, "fibonacci"};
}

PsiSequence PsiSequence::natural() {
  return {[](std::uint64_t n) { return Integer(n); }, "natural"};
}

PsiSequence PsiSequence::geometric(unsigned long q) {
  return {[q](std::uint64_t n) {
            Integer out;
            mpz_ui_pow_ui(out.get_mpz_t(), q, n);
            return out;
          },
          "geometric(" + std::to_string(q) + ")"};
}

namespace {

Integer checked_value(const PsiSequence& seq, std::uint64_t m) {
  Integer v = seq(m);
  if (v == 0) {
    throw std::invalid_argument("psi sequence '" + seq.name + "' vanishes at " +
                                std::to_string(m));
  }
  return v;
}

}  // namespace

Integer psi_factorial(const PsiSequence& seq, std::uint64_t n) {
  Integer out = 1;
  for (std::uint64_t m = 1; m <= n; ++m) out *= checked_value(seq, m);
  return out;
}

Integer psi_falling(const PsiSequence& seq, std::uint64_t x, std::uint64_t k) {
  if (k > x) {
    throw std::invalid_argument("psi_falling: k = " + std::to_string(k) +
                                " exceeds x = " + std::to_string(x));
  }
  Integer out = 1;
  for (std::uint64_t i = 0; i < k; ++i) out *= checked_value(seq, x - i);
  return out;
}

Rational psi_binomial(const PsiSequence& seq, std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::invalid_argument("psi_binomial: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
  Rational out(psi_falling(seq, n, k), psi_factorial(seq, k));
  out.canonicalize();
  return out;
}

Integer fibonomial_def(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw std::invalid_argument("fibonomial: k = " + std::to_string(k) +
                                " exceeds n = " + std::to_string(n));
  }
  const auto fibs = PsiSequence::fibonacci();
  return exact_div(psi_falling(fibs, n, k), psi_factorial(fibs, k), "fibonomial_def");
}

FibonomialTable::FibonomialTable(std::uint64_t max_n, RecurrenceForm form)
    : max_n_(max_n), form_(form) {
  std::vector<Integer> f(max_n + 3);
  for (std::uint64_t i = 0; i < f.size(); ++i) f[i] = fib(i);

  rows_.resize(max_n + 1);
  rows_[0] = {Integer(1)};
  for (std::uint64_t n = 0; n < max_n; ++n) {
    const auto& prev = rows_[n];
    auto& next = rows_[n + 1];
    next.resize(n + 2);
    next[0] = 1;
    for (std::uint64_t k = 1; k <= n + 1; ++k) {
      const Integer same = k <= n ? prev[k] : Integer(0);
      const Integer& lower = prev[k - 1];
      if (form == RecurrenceForm::A) {
        next[k] = f[k - 1] * same + f[n - k + 2] * lower;
      } else {
        // At k = n + 1 the index n - k is -1, and F_{-1} = 1.
        const Integer second = k <= n ? f[n - k] : Integer(1);
        next[k] = f[k + 1] * same + second * lower;
      }
    }
  }
}

const Integer& FibonomialTable::operator()(std::uint64_t n, std::uint64_t k) const {
  if (n > max_n_) {
    throw std::out_of_range("FibonomialTable: n = " + std::to_string(n) +
                            " beyond table bound " + std::to_string(max_n_));
  }
  if (k > n) return zero_;
  return rows_[n][k];
}

Integer fibonomial_rec(std::uint64_t n, std::uint64_t k, RecurrenceForm form) {
  if (k > n) return 0;
  return FibonomialTable(n, form)(n, k);
}

Integer binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) throw std::invalid_argument("binomial: negative upper index");
  if (b < 0 || b > a) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

}  // namespace cobweb
