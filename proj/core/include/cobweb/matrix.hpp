#pragma once

#include <cstddef>
#include <vector>

#include "cobweb/fibonacci.hpp"

namespace cobweb {

// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Integer row_sum(std::size_t r) const;
  Integer col_sum(std::size_t c) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Square upper-triangular matrix; writes below the diagonal are rejected.
// Products of upper-triangular matrices stay upper triangular, so
// multiplication only visits i <= k <= j.
class TriangularMatrix {
 public:
  TriangularMatrix() = default;
  explicit TriangularMatrix(std::size_t size);
  // Throws std::invalid_argument if `m` is not square upper triangular.
  explicit TriangularMatrix(IntMatrix m);

  static TriangularMatrix identity(std::size_t size);

  std::size_t size() const { return dense_.rows(); }

  const Integer& operator()(std::size_t r, std::size_t c) const { return dense_(r, c); }
  void set(std::size_t r, std::size_t c, Integer value);

  bool is_unitriangular() const;
  const IntMatrix& dense() const { return dense_; }

  friend bool operator==(const TriangularMatrix&, const TriangularMatrix&) = default;

 private:
  IntMatrix dense_;
};

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b);
TriangularMatrix operator-(const TriangularMatrix& a, const TriangularMatrix& b);

}  // namespace cobweb
