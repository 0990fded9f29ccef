#pragma once
#include <optional>

#include "nilsol/matrix.hpp"

namespace nilsol {

/// Exact Gaussian elimination, pivot = first nonzero column / first row.
/// Returns a particular solution of A x = rhs, or nullopt if inconsistent.
std::optional<RatVector> solve_rational(const RatMatrix& A, const RatVector& rhs);

/// Columns form the reduced-echelon basis of ker A (free variables set to unit).
RatMatrix kernel_rational(const RatMatrix& A);

/// Primitive integer basis of ker A (as a lattice), via column Hermite-style
/// reduction with a unimodular transform. Columns have entry gcd 1 and first
/// nonzero entry positive.
IntMatrix integer_kernel(const IntMatrix& A);

/// Minimum-norm solution of A x = rhs, or nullopt if inconsistent.
std::optional<RatVector> solve_min_norm(const RatMatrix& A, const RatVector& rhs);

/// Gauss-Jordan solve of A X = R (multiple right-hand columns) where each row
/// pivots on its *last* nonzero column and free variables are set to zero.
/// This pins the echelon particular solution used for metric reconstruction.
std::optional<RatMatrix> solve_last_pivot(const RatMatrix& A, const RatMatrix& R);

int rank(const RatMatrix& A);

}  // namespace nilsol
