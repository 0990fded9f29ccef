#include "nilsol/gf2.hpp"

namespace nilsol {

namespace {

// Row echelon of [A | s] over GF(2); each row carried as (row mask, rhs bit).
struct Echelon {
  std::vector<uint32_t> rows;
  std::vector<bool> rhs;
  std::vector<int> pivots;  // pivot column per stored row
  bool inconsistent = false;
};

Echelon echelonize(const GF2Matrix& A, GF2Vector s, bool with_rhs) {
  Echelon e;
  std::vector<uint32_t> work;
  std::vector<bool> wrhs;
  for (int i = 0; i < A.rows(); ++i) {
    work.push_back(A.row(i));
    wrhs.push_back(with_rhs && ((s >> i) & 1u));
  }
  int r = 0;
  for (int c = 0; c < A.cols(); ++c) {
    int sel = -1;
    for (int i = r; i < (int)work.size(); ++i)
      if ((work[i] >> c) & 1u) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(work[sel], work[r]);
    std::swap(wrhs[sel], wrhs[r]);
    for (int i = 0; i < (int)work.size(); ++i) {
      if (i == r || !((work[i] >> c) & 1u)) continue;
      work[i] ^= work[r];
      wrhs[i] = wrhs[i] ^ wrhs[r];
    }
    e.pivots.push_back(c);
    ++r;
  }
  for (int i = r; i < (int)work.size(); ++i)
    if (wrhs[i]) e.inconsistent = true;
  work.resize(r);
  wrhs.resize(r);
  e.rows = std::move(work);
  e.rhs = std::move(wrhs);
  return e;
}

}  // namespace

std::optional<GF2AffineSolutions> gf2_affine_solutions(const GF2Matrix& A, GF2Vector s) {
  Echelon e = echelonize(A, s, true);
  if (e.inconsistent) return std::nullopt;
  GF2AffineSolutions sol;
  for (size_t r = 0; r < e.pivots.size(); ++r)
    if (e.rhs[r]) sol.particular |= 1u << e.pivots[r];
  std::vector<bool> is_pivot(A.cols(), false);
  for (int p : e.pivots) is_pivot[p] = true;
  for (int c = 0; c < A.cols(); ++c) {
    if (is_pivot[c]) continue;
    GF2Vector v = 1u << c;
    for (size_t r = 0; r < e.pivots.size(); ++r)
      if ((e.rows[r] >> c) & 1u) v |= 1u << e.pivots[r];
    sol.kernel_basis.push_back(v);
  }
  return sol;
}

std::vector<GF2Vector> gf2_kernel(const GF2Matrix& A) {
  auto sol = gf2_affine_solutions(A, 0);
  return sol->kernel_basis;
}

int gf2_rank(const GF2Matrix& A) {
  Echelon e = echelonize(A, 0, false);
  return (int)e.pivots.size();
}

std::vector<GF2Vector> gf2_column_space(const GF2Matrix& A) {
  // echelonize the transpose: rows of A^T are columns of A
  GF2Matrix T(A.cols(), A.rows());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) T.set(j, i, A.get(i, j));
  Echelon e = echelonize(T, 0, false);
  return e.rows;
}

}  // namespace nilsol
