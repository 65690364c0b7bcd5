#pragma once

#include "ibls/matrix.hpp"

namespace ibls {

/// Conventional Cholesky factorization M = L * L^T with L lower-triangular
/// and positive diagonal. Throws NotPositiveDefinite on a pivot <= 0 or a
/// non-finite value.
LowerTriangular cholesky_lower(const SpdMatrix& m);

/// Inverse of an upper-triangular matrix by back substitution. Throws
/// SingularTriangular if a diagonal entry is zero or non-finite.
UpperTriangular invert_upper_triangular(const UpperTriangular& u);

/// M^{-1} for SPD M via Cholesky: factor, invert the factor, multiply.
SpdMatrix spd_inverse(const SpdMatrix& m);

/// Upper-triangular V with V * V^T = M. Computed by reversing row/column
/// order, taking the lower Cholesky factor, and reversing back.
UpperTriangular upper_cholesky_of(const SpdMatrix& m);

/// Upper-triangular F with F * F^T = M^{-1}, the inverse Cholesky factor.
/// Computed as the transpose of the inverted lower Cholesky factor of M.
UpperTriangular inverse_cholesky_upper(const SpdMatrix& m);

}  // namespace ibls
