#include "ibls/ridge.hpp"

namespace ibls {

namespace {

SpdMatrix gram_plus_lambda(const Matrix& a, double lambda) {
    Matrix g = a.transpose() * a;
    g = 0.5 * (g + g.transpose().eval());
    g.diagonal().array() += lambda;
    return SpdMatrix(std::move(g));
}

}  // namespace

Matrix standard_ridge_solution(const Matrix& a, const Matrix& y, RidgeParam lambda) {
    require_dims(a.rows() == y.rows(), "standard_ridge_solution: A and Y row counts differ");
    const SpdMatrix q = spd_inverse(gram_plus_lambda(a, lambda.value()));
    return q.mat() * (a.transpose() * y);
}

Matrix ridge_inverse(const Matrix& a, RidgeParam lambda) {
    const SpdMatrix q = spd_inverse(gram_plus_lambda(a, lambda.value()));
    return q.mat() * a.transpose();
}

RecursiveState init_recursive_state(const Matrix& a, const Matrix& y, RidgeParam lambda) {
    require_dims(a.rows() == y.rows(), "init_recursive_state: A and Y row counts differ");
    SpdMatrix q = spd_inverse(gram_plus_lambda(a, lambda.value()));
    Matrix w = q.mat() * (a.transpose() * y);
    return RecursiveState{std::move(q), std::move(w), lambda};
}

SqrtState init_sqrt_state(const Matrix& a, const Matrix& y, RidgeParam lambda) {
    require_dims(a.rows() == y.rows(), "init_sqrt_state: A and Y row counts differ");
    UpperTriangular f = inverse_cholesky_upper(gram_plus_lambda(a, lambda.value()));
    Matrix w = f.mat() * (f.mat().transpose() * (a.transpose() * y));
    return SqrtState{std::move(f), std::move(w), lambda};
}

Matrix assemble_partitioned_ridge_inverse(const Matrix& ridge_inv_l,
                                          const Matrix& b_tilde,
                                          const Matrix& a_p) {
    const Index k = ridge_inv_l.rows();
    const Index l = ridge_inv_l.cols();
    const Index p = a_p.rows();
    require_dims(b_tilde.rows() == k && b_tilde.cols() == p && a_p.cols() == k,
                 "assemble_partitioned_ridge_inverse: shape mismatch");
    Matrix out(k, l + p);
    out.leftCols(l) = ridge_inv_l - b_tilde * (a_p * ridge_inv_l);
    out.rightCols(p) = b_tilde;
    return out;
}

}  // namespace ibls
