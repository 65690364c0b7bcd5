#pragma once

#include "ibls/dense_linalg.hpp"
#include "ibls/matrix.hpp"

namespace ibls {

/// Ridge regularization strength, strictly positive.
class RidgeParam {
  public:
    explicit RidgeParam(double lambda) : lambda_(lambda) {
        if (!(lambda > 0.0)) throw Error("RidgeParam: lambda must be > 0");
    }
    double value() const { return lambda_; }

  private:
    double lambda_;
};

/// State of the recursive algorithm: Q = (A^T A + lambda I)^{-1} for the
/// rows absorbed so far, plus the current output weights.
struct RecursiveState {
    SpdMatrix q;
    Matrix w;  // k x c
    RidgeParam lambda;

    Index k() const { return q.dim(); }
    Index c() const { return w.cols(); }
};

/// State of the square-root algorithm: F upper-triangular with
/// F F^T = (A^T A + lambda I)^{-1}, plus the current output weights.
struct SqrtState {
    UpperTriangular f;
    Matrix w;  // k x c
    RidgeParam lambda;

    Index k() const { return f.dim(); }
    Index c() const { return w.cols(); }
};

/// W = (A^T A + lambda I)^{-1} A^T Y, computed directly. The reference
/// solution every incremental algorithm is checked against.
Matrix standard_ridge_solution(const Matrix& a, const Matrix& y, RidgeParam lambda);

/// (A^T A + lambda I)^{-1} A^T, the k x l ridge inverse. Used by the
/// stepwise baseline and by tests; the incremental algorithms never form it.
Matrix ridge_inverse(const Matrix& a, RidgeParam lambda);

RecursiveState init_recursive_state(const Matrix& a, const Matrix& y, RidgeParam lambda);
SqrtState init_sqrt_state(const Matrix& a, const Matrix& y, RidgeParam lambda);

/// Assembles the ridge inverse of [A_l; A_p] from the ridge inverse of A_l
/// and the gain matrix b_tilde: [ A_l~ - b_tilde A_p A_l~ | b_tilde ].
Matrix assemble_partitioned_ridge_inverse(const Matrix& ridge_inv_l,
                                          const Matrix& b_tilde,
                                          const Matrix& a_p);

}  // namespace ibls
