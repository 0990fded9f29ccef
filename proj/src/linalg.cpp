#include "nilsol/linalg.hpp"

#include <algorithm>

namespace nilsol {

namespace {

// Forward elimination into row echelon form of [A | rhs...]; returns pivot
// columns in order. aug is modified in place.
std::vector<int> echelonize(RatMatrix& aug, int ncols_lhs) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols_lhs && r < aug.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < aug.rows(); ++i)
      if (!aug(i, c).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < aug.cols(); ++j) std::swap(aug(sel, j), aug(r, j));
    Rational inv = Rational(1) / aug(r, c);
    for (int j = c; j < aug.cols(); ++j) aug(r, j) *= inv;
    for (int i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, c).is_zero()) continue;
      Rational f = aug(i, c);
      for (int j = c; j < aug.cols(); ++j) aug(i, j) -= f * aug(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& rhs) {
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = rhs[i];
  }
  auto pivots = echelonize(aug, A.cols());
  for (int i = (int)pivots.size(); i < A.rows(); ++i)
    if (!aug(i, A.cols()).is_zero()) return std::nullopt;
  RatVector x(A.cols(), Rational(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug((int)r, A.cols());
  return x;
}

RatMatrix kernel_rational(const RatMatrix& A) {
  RatMatrix m = A;
  auto pivots = echelonize(m, A.cols());
  std::vector<bool> is_pivot(A.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < A.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix K(A.cols(), (int)free_cols.size());
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    K(fc, (int)k) = Rational(1);
    for (size_t r = 0; r < pivots.size(); ++r) K(pivots[r], (int)k) = -m((int)r, fc);
  }
  return K;
}

int rank(const RatMatrix& A) {
  RatMatrix m = A;
  return (int)echelonize(m, A.cols()).size();
}

IntMatrix integer_kernel(const IntMatrix& A) {
  const int rows = A.rows(), cols = A.cols();
  IntMatrix B = A;
  IntMatrix U = IntMatrix::identity(cols);
  auto col_sub = [&](int dst, int src, const Int& q) {
    if (q == 0) return;
    for (int i = 0; i < rows; ++i) B(i, dst) -= q * B(i, src);
    for (int i = 0; i < cols; ++i) U(i, dst) -= q * U(i, src);
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < rows; ++i) std::swap(B(i, a), B(i, b));
    for (int i = 0; i < cols; ++i) std::swap(U(i, a), U(i, b));
  };
  auto col_neg = [&](int c) {
    for (int i = 0; i < rows; ++i) B(i, c) = -B(i, c);
    for (int i = 0; i < cols; ++i) U(i, c) = -U(i, c);
  };

  int next = 0;  // next pivot column slot
  for (int r = 0; r < rows && next < cols; ++r) {
    // gcd-reduce row r over columns next..cols-1 until a single nonzero remains
    for (;;) {
      int jmin = -1;
      for (int j = next; j < cols; ++j) {
        if (B(r, j) == 0) continue;
        if (jmin < 0 || boost::multiprecision::abs(B(r, j)) <
                            boost::multiprecision::abs(B(r, jmin)))
          jmin = j;
      }
      if (jmin < 0) break;  // row entirely zero here
      bool others = false;
      for (int j = next; j < cols; ++j) {
        if (j == jmin || B(r, j) == 0) continue;
        others = true;
        col_sub(j, jmin, floor_div(B(r, j), B(r, jmin)));
      }
      if (!others) {
        col_swap(next, jmin);
        if (B(r, next) < 0) col_neg(next);
        ++next;
        break;
      }
    }
  }
  IntMatrix K(cols, cols - next);
  for (int j = next; j < cols; ++j) {
    // normalize sign: first nonzero entry positive
    int fn = -1;
    for (int i = 0; i < cols; ++i)
      if (U(i, j) != 0) { fn = i; break; }
    Int s = (fn >= 0 && U(fn, j) < 0) ? Int(-1) : Int(1);
    for (int i = 0; i < cols; ++i) K(i, j - next) = s * U(i, j);
  }
  return K;
}

std::optional<RatVector> solve_min_norm(const RatMatrix& A, const RatVector& rhs) {
  auto p0 = solve_rational(A, rhs);
  if (!p0) return std::nullopt;
  RatMatrix K = kernel_rational(A);
  if (K.cols() == 0) return p0;
  // minimize |p0 + K z|^2: solve (K^T K) z = -K^T p0
  RatMatrix Kt = K.transposed();
  RatMatrix G = Kt * K;
  RatVector b(K.cols(), Rational(0));
  for (int i = 0; i < Kt.rows(); ++i) {
    Rational s(0);
    for (int j = 0; j < Kt.cols(); ++j) s += Kt(i, j) * (*p0)[j];
    b[i] = -s;
  }
  auto z = solve_rational(G, b);  // G positive definite, always solvable
  RatVector x = *p0;
  for (int i = 0; i < K.rows(); ++i)
    for (int j = 0; j < K.cols(); ++j) x[i] += K(i, j) * (*z)[j];
  return x;
}

std::optional<RatMatrix> solve_last_pivot(const RatMatrix& A, const RatMatrix& R) {
  const int n = A.cols(), w = R.cols();
  RatMatrix aug(A.rows(), n + w);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = A(i, j);
    for (int j = 0; j < w; ++j) aug(i, n + j) = R(i, j);
  }
  std::vector<int> pivot_row(n, -1);
  for (int r = 0; r < aug.rows(); ++r) {
    // reduce by existing pivots
    for (int c = n - 1; c >= 0; --c) {
      if (pivot_row[c] < 0 || aug(r, c).is_zero() || pivot_row[c] == r) continue;
      Rational f = aug(r, c);
      int pr = pivot_row[c];
      for (int j = 0; j < n + w; ++j) aug(r, j) -= f * aug(pr, j);
    }
    int pc = -1;
    for (int c = n - 1; c >= 0; --c)
      if (!aug(r, c).is_zero()) { pc = c; break; }
    if (pc < 0) {
      for (int j = 0; j < w; ++j)
        if (!aug(r, n + j).is_zero()) return std::nullopt;
      continue;
    }
    Rational inv = Rational(1) / aug(r, pc);
    for (int j = 0; j < n + w; ++j) aug(r, j) *= inv;
    for (int i = 0; i < aug.rows(); ++i) {
      if (i == r || aug(i, pc).is_zero()) continue;
      Rational f = aug(i, pc);
      for (int j = 0; j < n + w; ++j) aug(i, j) -= f * aug(r, j);
    }
    pivot_row[pc] = r;
  }
  RatMatrix X(n, w);
  for (int c = 0; c < n; ++c) {
    if (pivot_row[c] < 0) continue;  // free -> 0
    for (int j = 0; j < w; ++j) X(c, j) = aug(pivot_row[c], n + j);
  }
  return X;
}

}  // namespace nilsol
