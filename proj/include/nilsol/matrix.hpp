#pragma once
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "nilsol/rational.hpp"

namespace nilsol {

/// Dense matrix over T, row-major. Sizes here are tiny (n <= 10, m <= 16).
template <class T>
class Dense {
public:
  Dense() : rows_(0), cols_(0) {}
  Dense(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_((size_t)rows * cols, fill) {}
  static Dense identity(int n) {
    Dense m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[(size_t)i * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

  Dense transposed() const {
    Dense t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Dense operator*(const Dense& a, const Dense& b) {
    Dense c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> out(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == T(0))) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Dense& a, const Dense& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  int rows_, cols_;
  std::vector<T> data_;
};

using RatMatrix = Dense<Rational>;
using IntMatrix = Dense<Int>;
using RatVector = std::vector<Rational>;
using IntVector = std::vector<Int>;

inline RatMatrix to_rational(const IntMatrix& a) {
  RatMatrix r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = Rational(a(i, j));
  return r;
}

/// Matrix over GF(2); a row is a bitmask (cols <= 32).
class GF2Matrix {
public:
  GF2Matrix() : cols_(0) {}
  GF2Matrix(int rows, int cols) : cols_(cols), rows_(rows, 0u) {}

  int rows() const { return (int)rows_.size(); }
  int cols() const { return cols_; }
  bool get(int i, int j) const { return (rows_[i] >> j) & 1u; }
  void set(int i, int j, bool v) {
    if (v) rows_[i] |= (1u << j);
    else rows_[i] &= ~(1u << j);
  }
  uint32_t row(int i) const { return rows_[i]; }
  uint32_t& row(int i) { return rows_[i]; }

  /// y = M x over GF(2), x given as bitmask of length cols().
  uint32_t apply(uint32_t x) const {
    uint32_t y = 0;
    for (int i = 0; i < rows(); ++i) y |= (uint32_t)(__builtin_parity(rows_[i] & x)) << i;
    return y;
  }

  friend bool operator==(const GF2Matrix& a, const GF2Matrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

private:
  int cols_;
  std::vector<uint32_t> rows_;
};

using GF2Vector = uint32_t;  // bitmask, length carried externally

}  // namespace nilsol
