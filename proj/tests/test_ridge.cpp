#include <doctest.h>

#include <random>

#include "ibls/ridge.hpp"
#include "ibls/update.hpp"
#include "test_util.hpp"

using namespace ibls;
using test::max_abs_diff;
using test::random_matrix;
using test::rel_err;

TEST_CASE("standard_ridge_solution hand cases") {
    // A = Y = I, lambda = 1  ->  W = 0.5 I
    CHECK(max_abs_diff(standard_ridge_solution(Matrix::Identity(2, 2), Matrix::Identity(2, 2),
                                               RidgeParam(1.0)),
                       0.5 * Matrix::Identity(2, 2)) < 1e-15);

    // Scalar case: A = [1;1], Y = [1;3], lambda = 2 -> (2+2)^{-1} * 4 = 1
    Matrix a(2, 1), y(2, 1);
    a << 1, 1;
    y << 1, 3;
    CHECK(standard_ridge_solution(a, y, RidgeParam(2.0))(0, 0) == doctest::Approx(1.0));

    // Zero activations give zero weights.
    CHECK(standard_ridge_solution(Matrix::Zero(3, 2), Matrix::Ones(3, 2), RidgeParam(1.0))
              .isZero(0.0));
}

TEST_CASE("standard_ridge_solution rejects mismatched rows") {
    CHECK_THROWS_AS(standard_ridge_solution(Matrix::Zero(3, 2), Matrix::Zero(2, 2),
                                            RidgeParam(1.0)),
                    DimensionMismatch);
}

TEST_CASE("RidgeParam rejects nonpositive lambda") {
    CHECK_THROWS_AS(RidgeParam(0.0), Error);
    CHECK_THROWS_AS(RidgeParam(-1.0), Error);
}

TEST_CASE("ridge_inverse hand cases") {
    CHECK(max_abs_diff(ridge_inverse(Matrix::Identity(2, 2), RidgeParam(1.0)),
                       0.5 * Matrix::Identity(2, 2)) < 1e-15);

    Matrix a(1, 1);
    a << 2.0;
    CHECK(std::abs(ridge_inverse(a, RidgeParam(1e-12))(0, 0) - 0.5) < 1e-10);

    CHECK(ridge_inverse(Matrix::Zero(4, 3), RidgeParam(2.0)).isZero(0.0));
    CHECK(ridge_inverse(Matrix::Zero(4, 3), RidgeParam(2.0)).rows() == 3);
}

TEST_CASE("init_recursive_state") {
    const RecursiveState s1 =
        init_recursive_state(Matrix::Identity(2, 2), Matrix::Identity(2, 2), RidgeParam(1.0));
    CHECK(max_abs_diff(s1.q.mat(), 0.5 * Matrix::Identity(2, 2)) < 1e-15);

    const RecursiveState s2 =
        init_recursive_state(Matrix::Zero(5, 2), Matrix::Zero(5, 3), RidgeParam(2.0));
    CHECK(max_abs_diff(s2.q.mat(), 0.5 * Matrix::Identity(2, 2)) < 1e-15);

    std::mt19937 gen(3);
    const Matrix a = random_matrix(gen, 6, 3);
    const Matrix y = random_matrix(gen, 6, 2);
    const RecursiveState s3 = init_recursive_state(a, y, RidgeParam(0.3));
    Matrix gram = a.transpose() * a + 0.3 * Matrix::Identity(3, 3);
    CHECK(max_abs_diff(s3.q.mat() * gram, Matrix::Identity(3, 3)) < 1e-12);
}

TEST_CASE("init_sqrt_state") {
    const SqrtState s1 =
        init_sqrt_state(Matrix::Identity(2, 2), Matrix::Identity(2, 2), RidgeParam(1.0));
    CHECK(max_abs_diff(s1.f.mat(), std::sqrt(0.5) * Matrix::Identity(2, 2)) < 1e-15);

    std::mt19937 gen(5);
    const Matrix a = random_matrix(gen, 6, 3);
    const Matrix y = random_matrix(gen, 6, 2);
    const SqrtState s2 = init_sqrt_state(a, y, RidgeParam(0.2));
    // strictly upper triangular
    for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < i; ++j) CHECK(s2.f.mat()(i, j) == 0.0);
    const Matrix gram_inv =
        (a.transpose() * a + 0.2 * Matrix::Identity(3, 3)).inverse();
    CHECK(rel_err(s2.f.mat() * s2.f.mat().transpose(), gram_inv) < 1e-10);
}

TEST_CASE("initial states agree with the direct solution") {
    std::mt19937 gen(23);
    for (double lambda : {1e-8, 1e-4, 1e-1}) {
        for (int rep = 0; rep < 3; ++rep) {
            const Index l = 20 + 10 * rep;
            const Index k = 5 + 5 * rep;
            const Matrix a = random_matrix(gen, l, k);
            const Matrix y = random_matrix(gen, l, 3);
            const Matrix w_ref = standard_ridge_solution(a, y, RidgeParam(lambda));
            CHECK(rel_err(init_recursive_state(a, y, RidgeParam(lambda)).w, w_ref) < 1e-10);
            CHECK(rel_err(init_sqrt_state(a, y, RidgeParam(lambda)).w, w_ref) < 1e-10);
        }
    }
}

TEST_CASE("assemble_partitioned_ridge_inverse hand cases") {
    // A_l = A_p = I2, lambda = 1: stacked Gram is 3I, both blocks (1/3) I.
    const RidgeParam lambda(1.0);
    const Matrix a_l = Matrix::Identity(2, 2);
    const Matrix a_p = Matrix::Identity(2, 2);
    const Matrix ridge_l = ridge_inverse(a_l, lambda);
    const RecursiveState state = init_recursive_state(a_l, Matrix::Zero(2, 1), lambda);
    const Matrix b_tilde = recursive_gain(state.q, a_p);
    const Matrix out = assemble_partitioned_ridge_inverse(ridge_l, b_tilde, a_p);
    Matrix want(2, 4);
    want << 1.0 / 3, 0, 1.0 / 3, 0, 0, 1.0 / 3, 0, 1.0 / 3;
    CHECK(max_abs_diff(out, want) < 1e-14);
}

TEST_CASE("assemble_partitioned_ridge_inverse with a zero increment") {
    std::mt19937 gen(29);
    const RidgeParam lambda(0.5);
    const Matrix a_l = random_matrix(gen, 5, 3);
    const Matrix a_p = Matrix::Zero(2, 3);
    const Matrix ridge_l = ridge_inverse(a_l, lambda);
    const RecursiveState state = init_recursive_state(a_l, Matrix::Zero(5, 1), lambda);
    const Matrix b_tilde = recursive_gain(state.q, a_p);
    const Matrix out = assemble_partitioned_ridge_inverse(ridge_l, b_tilde, a_p);
    CHECK(max_abs_diff(out.leftCols(5), ridge_l) < 1e-14);
    CHECK(out.rightCols(2).isZero(1e-14));
}

TEST_CASE("partitioned assembly matches the stacked ridge inverse") {
    std::mt19937 gen(31);
    const RidgeParam lambda(0.05);
    for (Index p : {2, 3, 7}) {  // covers p<k, p=k, p>k with k=3
        const Index l = 5, k = 3;
        const Matrix a_l = random_matrix(gen, l, k);
        const Matrix a_p = random_matrix(gen, p, k);
        const Matrix ridge_l = ridge_inverse(a_l, lambda);
        const RecursiveState state = init_recursive_state(a_l, Matrix::Zero(l, 1), lambda);
        const Matrix b_tilde = recursive_gain(state.q, a_p);
        const Matrix out = assemble_partitioned_ridge_inverse(ridge_l, b_tilde, a_p);

        Matrix stacked(l + p, k);
        stacked.topRows(l) = a_l;
        stacked.bottomRows(p) = a_p;
        CHECK(rel_err(out, ridge_inverse(stacked, lambda)) < 1e-9);
    }
}
