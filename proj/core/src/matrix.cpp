#include "cobweb/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace cobweb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Integer IntMatrix::row_sum(std::size_t r) const {
  Integer s = 0;
  for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c);
  return s;
}

Integer IntMatrix::col_sum(std::size_t c) const {
  Integer s = 0;
  for (std::size_t r = 0; r < rows_; ++r) s += (*this)(r, c);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("matrix product: " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " times " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()));
  }
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

TriangularMatrix::TriangularMatrix(std::size_t size) : dense_(size, size) {}

TriangularMatrix::TriangularMatrix(IntMatrix m) : dense_(std::move(m)) {
  if (dense_.rows() != dense_.cols()) throw std::invalid_argument("triangular matrix must be square");
  for (std::size_t r = 0; r < dense_.rows(); ++r) {
    for (std::size_t c = 0; c < r; ++c) {
      if (dense_(r, c) != 0) {
        throw std::invalid_argument("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                    ") below the diagonal is nonzero");
      }
    }
  }
}

TriangularMatrix TriangularMatrix::identity(std::size_t size) {
  return TriangularMatrix(IntMatrix::identity(size));
}

void TriangularMatrix::set(std::size_t r, std::size_t c, Integer value) {
  if (c < r && value != 0) {
    throw std::invalid_argument("cannot write nonzero below the diagonal");
  }
  dense_(r, c) = std::move(value);
}

bool TriangularMatrix::is_unitriangular() const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (dense_(i, i) != 1) return false;
  }
  return true;
}

TriangularMatrix operator*(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("triangular product: size mismatch");
  const std::size_t n = a.size();
  TriangularMatrix out(n);
  Integer acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      acc = 0;
      for (std::size_t k = i; k <= j; ++k) {
        if (a(i, k) != 0 && b(k, j) != 0) acc += a(i, k) * b(k, j);
      }
      if (acc != 0) out.set(i, j, acc);
    }
  }
  return out;
}

TriangularMatrix operator-(const TriangularMatrix& a, const TriangularMatrix& b) {
  if (a.size() != b.size()) throw std::invalid_argument("triangular difference: size mismatch");
  TriangularMatrix out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i; j < a.size(); ++j) out.set(i, j, a(i, j) - b(i, j));
  }
  return out;
}

}  // namespace cobweb
