#pragma once

#include "ibls/ridge.hpp"

namespace ibls {

/// New activations and labels arriving in one increment.
struct IncrementBatch {
    Matrix a_p;  // p x k
    Matrix y_p;  // p x c

    Index p() const { return a_p.rows(); }
};

enum class BranchKind { LargeBatch, SmallBatch };

/// LargeBatch iff p >= k; the tie p == k goes to the large-batch formulas.
BranchKind select_branch(Index p, Index k);

/// One step of the recursive algorithm: updates Q by the matrix inversion
/// lemma (small batch) or the inverse-of-a-sum form (large batch), then the
/// weights from the fresh Q. The returned Q is re-symmetrized.
RecursiveState update_recursive(const RecursiveState& state, const IncrementBatch& batch);

/// One step of the square-root algorithm: F' = F V where V is the
/// upper-triangular factor of the batch correction, so F' stays
/// upper-triangular by construction.
SqrtState update_sqrt(const SqrtState& state, const IncrementBatch& batch);

struct BaselineOptions {
    // C is treated as zero when |C|_max <= eps_c * max(1, |A_p|_max).
    double eps_c = 1e-9;
};

/// State of the existing stepwise algorithm: the full activation history,
/// its (approximate) generalized inverse, and the weights.
struct BaselineState {
    Matrix a_l;       // l x k, all rows seen
    Matrix a_l_pinv;  // k x l
    Matrix w;         // k x c
    RidgeParam lambda;
    BaselineOptions options;

    Index k() const { return a_l.cols(); }
    Index l() const { return a_l.rows(); }
};

BaselineState init_baseline_state(const Matrix& a, const Matrix& y, RidgeParam lambda,
                                  BaselineOptions options = {});

/// One step of the existing stepwise algorithm: grows the stored
/// generalized inverse column-block by column-block.
BaselineState update_generalized_existing(const BaselineState& state,
                                          const IncrementBatch& batch);

/// Gain matrix of the recursive update for p < k:
/// B~ = Q A_p^T (I + A_p Q A_p^T)^{-1}. Exposed for the equivalence checks
/// against the baseline gain.
Matrix recursive_gain(const SpdMatrix& q, const Matrix& a_p);

/// Baseline gain under the C = 0 branch, computed from the stored
/// generalized inverse: B = Dbar (I + A_p Dbar)^{-1} for p <= k, or
/// B = (I + Dbar A_p)^{-1} Dbar for p >= k, with Dbar = A_l+ (A_p A_l+)^T.
Matrix baseline_gain_c_zero(const Matrix& a_l_pinv, const Matrix& a_p);

}  // namespace ibls
