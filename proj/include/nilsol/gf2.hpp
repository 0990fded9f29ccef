#pragma once
#include <optional>
#include <vector>

#include "nilsol/matrix.hpp"

namespace nilsol {

struct GF2AffineSolutions {
  GF2Vector particular = 0;
  std::vector<GF2Vector> kernel_basis;  // solutions = particular + span(basis)

  /// All 2^k solutions, enumerated by binary counter over the basis.
  std::vector<GF2Vector> enumerate() const {
    std::vector<GF2Vector> out;
    size_t k = kernel_basis.size();
    out.reserve(1u << k);
    for (uint32_t mask = 0; mask < (1u << k); ++mask) {
      GF2Vector v = particular;
      for (size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1u) v ^= kernel_basis[i];
      out.push_back(v);
    }
    return out;
  }
};

/// Solves A x = s over GF(2); nullopt when inconsistent.
std::optional<GF2AffineSolutions> gf2_affine_solutions(const GF2Matrix& A, GF2Vector s);

/// Basis of ker A over GF(2).
std::vector<GF2Vector> gf2_kernel(const GF2Matrix& A);

int gf2_rank(const GF2Matrix& A);

/// Basis of the column space of A (as bitmasks of length rows()).
std::vector<GF2Vector> gf2_column_space(const GF2Matrix& A);

inline GF2Matrix mod2(const IntMatrix& a) {
  GF2Matrix m(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m.set(i, j, (a(i, j) % 2) != 0);
  return m;
}

}  // namespace nilsol
