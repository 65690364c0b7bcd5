#include "ibls/update.hpp"

namespace ibls {

namespace {

void check_batch(Index k, Index c, const IncrementBatch& batch) {
    require_dims(batch.a_p.rows() >= 1, "update: empty batch");
    require_dims(batch.a_p.cols() == k, "update: batch column count != k");
    require_dims(batch.y_p.rows() == batch.a_p.rows(), "update: A_p and Y_p row counts differ");
    require_dims(batch.y_p.cols() == c, "update: label column count != c");
}

SpdMatrix symmetrized_spd(Matrix m) {
    m = 0.5 * (m + m.transpose().eval());
    return SpdMatrix(std::move(m));
}

Matrix lu_solve(const Matrix& a, const Matrix& b, const char* what) {
    Matrix x = a.partialPivLu().solve(b);
    if (!x.allFinite()) throw NumericalBreakdown(what);
    return x;
}

}  // namespace

BranchKind select_branch(Index p, Index k) {
    require_dims(p >= 1 && k >= 1, "select_branch: counts must be >= 1");
    return p >= k ? BranchKind::LargeBatch : BranchKind::SmallBatch;
}

Matrix recursive_gain(const SpdMatrix& q, const Matrix& a_p) {
    const Matrix g = q.mat() * a_p.transpose();  // k x p
    Matrix inner = Matrix::Identity(a_p.rows(), a_p.rows()) + a_p * g;
    try {
        return g * spd_inverse(symmetrized_spd(std::move(inner))).mat();
    } catch (const NotPositiveDefinite&) {
        throw NumericalBreakdown("recursive_gain: inner factorization failed");
    }
}

RecursiveState update_recursive(const RecursiveState& state, const IncrementBatch& batch) {
    const Index k = state.k();
    check_batch(k, state.c(), batch);

    const Matrix residual = batch.y_p - batch.a_p * state.w;
    Matrix q_next;
    Matrix w_next;
    if (select_branch(batch.p(), k) == BranchKind::LargeBatch) {
        const Matrix t = Matrix::Identity(k, k) +
                         state.q.mat() * (batch.a_p.transpose() * batch.a_p);
        q_next = lu_solve(t, state.q.mat(), "update_recursive: inverse of I + Q A_p^T A_p failed");
        q_next = 0.5 * (q_next + q_next.transpose().eval());
        w_next = state.w + q_next * (batch.a_p.transpose() * residual);
    } else {
        const Matrix gain = recursive_gain(state.q, batch.a_p);
        q_next = state.q.mat() - gain * (batch.a_p * state.q.mat());
        q_next = 0.5 * (q_next + q_next.transpose().eval());
        w_next = state.w + gain * residual;
    }
    return RecursiveState{SpdMatrix(std::move(q_next)), std::move(w_next), state.lambda};
}

SqrtState update_sqrt(const SqrtState& state, const IncrementBatch& batch) {
    const Index k = state.k();
    const Index p = batch.p();
    check_batch(k, state.c(), batch);

    const Matrix& f = state.f.mat();
    const Matrix s = f.transpose() * batch.a_p.transpose();  // k x p
    const Matrix residual = batch.y_p - batch.a_p * state.w;

    Matrix f_next;
    Matrix w_next;
    if (select_branch(p, k) == BranchKind::LargeBatch) {
        Matrix inner = Matrix::Identity(k, k) + s * s.transpose();
        const UpperTriangular v = inverse_cholesky_upper(symmetrized_spd(std::move(inner)));
        f_next = f * v.mat();
        w_next = state.w +
                 f_next * (f_next.transpose() * (batch.a_p.transpose() * residual));
    } else {
        Matrix inner = Matrix::Identity(p, p) + s.transpose() * s;
        Matrix s_tilde;
        try {
            s_tilde = s * spd_inverse(symmetrized_spd(std::move(inner))).mat();
        } catch (const NotPositiveDefinite&) {
            throw NumericalBreakdown("update_sqrt: inverse of I + S^T S failed");
        }
        Matrix corr = Matrix::Identity(k, k) - s_tilde * s.transpose();
        const UpperTriangular v = upper_cholesky_of(symmetrized_spd(std::move(corr)));
        f_next = f * v.mat();
        w_next = state.w + f * (s_tilde * residual);
    }
    return SqrtState{UpperTriangular(std::move(f_next)), std::move(w_next), state.lambda};
}

Matrix baseline_gain_c_zero(const Matrix& a_l_pinv, const Matrix& a_p) {
    const Index k = a_p.cols();
    const Index p = a_p.rows();
    const Matrix d = (a_p * a_l_pinv).transpose();  // l x p
    const Matrix d_bar = a_l_pinv * d;              // k x p
    if (p <= k) {
        Matrix inner = Matrix::Identity(p, p) + a_p * d_bar;
        try {
            return d_bar * spd_inverse(symmetrized_spd(std::move(inner))).mat();
        } catch (const NotPositiveDefinite&) {
            throw NumericalBreakdown("baseline gain: inverse of I + A_p Dbar failed");
        }
    }
    const Matrix t = Matrix::Identity(k, k) + d_bar * a_p;
    return lu_solve(t, d_bar, "baseline gain: inverse of I + Dbar A_p failed");
}

BaselineState init_baseline_state(const Matrix& a, const Matrix& y, RidgeParam lambda,
                                  BaselineOptions options) {
    require_dims(a.rows() == y.rows(), "init_baseline_state: A and Y row counts differ");
    Matrix pinv = ridge_inverse(a, lambda);
    Matrix w = pinv * y;
    return BaselineState{a, std::move(pinv), std::move(w), lambda, options};
}

BaselineState update_generalized_existing(const BaselineState& state,
                                          const IncrementBatch& batch) {
    const Index k = state.k();
    const Index l = state.l();
    const Index p = batch.p();
    check_batch(k, state.w.cols(), batch);

    const Matrix d_t = batch.a_p * state.a_l_pinv;               // p x l
    const Matrix c = batch.a_p.transpose() - state.a_l.transpose() * d_t.transpose();

    const double c_threshold =
        state.options.eps_c * std::max(1.0, batch.a_p.cwiseAbs().maxCoeff());
    Matrix b;  // k x p
    if (c.cwiseAbs().maxCoeff() > c_threshold) {
        // C != 0: B is the transposed (ridge-approximated) generalized
        // inverse of C, which is the k x p shape the partitioned inverse needs.
        b = ridge_inverse(c, state.lambda).transpose();
    } else {
        b = baseline_gain_c_zero(state.a_l_pinv, batch.a_p);
    }

    Matrix w_next = state.w + b * (batch.y_p - batch.a_p * state.w);

    Matrix pinv_next(k, l + p);
    pinv_next.leftCols(l) = state.a_l_pinv - b * d_t;
    pinv_next.rightCols(p) = b;
    if (!pinv_next.allFinite())
        throw NumericalBreakdown("update_generalized_existing: non-finite inverse");

    Matrix a_next(l + p, k);
    a_next.topRows(l) = state.a_l;
    a_next.bottomRows(p) = batch.a_p;

    return BaselineState{std::move(a_next), std::move(pinv_next), std::move(w_next),
                         state.lambda, state.options};
}

}  // namespace ibls
