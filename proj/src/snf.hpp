#pragma once

#include "numutil.hpp"

namespace mk3 {

using IntMat = std::vector<std::vector<Int>>;
using IntVec = std::vector<Int>;

IntMat mat_identity(size_t n);
IntMat mat_mul(const IntMat& A, const IntMat& B);
IntMat mat_transpose(const IntMat& A);
bool mat_eq(const IntMat& A, const IntMat& B);
IntVec mat_apply(const IntMat& A, const IntVec& v);

// Determinant by fraction-free Bareiss elimination.
Int mat_det(IntMat A);

// Eigenvalue sign counts of a symmetric integer matrix via Jacobi/LDL over Q:
// returns {positive, negative, zero} inertia.
std::array<int, 3> symmetric_inertia(const IntMat& A);

// Invariant factors d_1 | d_2 | ... (absolute values, zeros dropped).
std::vector<Int> smith_invariant_factors(IntMat A);

// Basis of the integer kernel {v : A v = 0} (saturated: obtained by unimodular
// column operations).
std::vector<IntVec> kernel_basis(const IntMat& A);

// Solve A x = rhs exactly; throws if inconsistent or non-integral.
IntVec solve_exact(const IntMat& A, const IntVec& rhs);

// Solve A X = B columnwise.
IntMat solve_exact_mat(const IntMat& A, const IntMat& B);

}  // namespace mk3
