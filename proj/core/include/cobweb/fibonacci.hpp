#pragma once

// Fibonacci numbers, the psi-factorial calculus built on an arbitrary
// nonvanishing integer sequence, and fibonomial coefficients.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cobweb {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an exact division leaves a remainder. Every such division in
// this library is a theorem, so seeing this means an implementation bug.
class InexactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Divides and checks that the remainder is zero.
Integer exact_div(const Integer& num, const Integer& den, const char* what);

// F_n with F_0 = 0, F_1 = F_2 = 1.
Integer fib(std::uint64_t n);

// F_n extended to negative indices by F_{-n} = (-1)^{n+1} F_n.
Integer fib_signed(std::int64_t n);

// A sequence psi used to build generalized factorials n_psi! and
// binomials. Values at positive indices must be nonzero wherever a
// factorial or falling product touches them.
struct PsiSequence {
  std::function<Integer(std::uint64_t)> values;
  std::string name;

  Integer operator()(std::uint64_t n) const { return values(n); }

  static PsiSequence fibonacci();
  static PsiSequence natural();
  // psi(n) = q^n. Gives the q-analogue-free geometric instance; psi(0) = 1.
  static PsiSequence geometric(unsigned long q);
};

// n_psi! = psi(n) psi(n-1) ... psi(1); 1 when n = 0.
Integer psi_factorial(const PsiSequence& seq, std::uint64_t n);

// x_psi^(k) = psi(x) psi(x-1) ... psi(x-k+1); 1 when k = 0.
Integer psi_falling(const PsiSequence& seq, std::uint64_t x, std::uint64_t k);

// n_psi^(k) / k_psi!, reduced.
Rational psi_binomial(const PsiSequence& seq, std::uint64_t n, std::uint64_t k);

// (n over k)_F computed as n_F^(k) / k_F!.
Integer fibonomial_def(std::uint64_t n, std::uint64_t k);

enum class RecurrenceForm {
  // (n+1, k) = F_{k-1} (n, k) + F_{n-k+2} (n, k-1)
  A,
  // (n+1, k) = F_{k+1} (n, k) + F_{n-k} (n, k-1)
  B,
};

// Dynamic-programming table of fibonomials over 0 <= n <= max_n, all k,
// filled from one of the two recurrences with (n, 0) = 1 and (n, k) = 0
// for k > n. Immutable after construction.
class FibonomialTable {
 public:
  FibonomialTable(std::uint64_t max_n, RecurrenceForm form);

  std::uint64_t max_n() const { return max_n_; }
  RecurrenceForm form() const { return form_; }

  // Any k is accepted; k > n yields 0.
  const Integer& operator()(std::uint64_t n, std::uint64_t k) const;

 private:
  std::uint64_t max_n_;
  RecurrenceForm form_;
  std::vector<std::vector<Integer>> rows_;  // rows_[n] has n + 1 entries
  Integer zero_{0};
};

Integer fibonomial_rec(std::uint64_t n, std::uint64_t k, RecurrenceForm form);

// Ordinary binomial C(a, b); 0 when b < 0 or b > a.
Integer binomial(std::int64_t a, std::int64_t b);

}  // namespace cobweb
