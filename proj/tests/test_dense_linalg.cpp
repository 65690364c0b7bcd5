#include <doctest.h>

#include <cmath>
#include <random>

#include "ibls/dense_linalg.hpp"
#include "test_util.hpp"

using namespace ibls;
using test::max_abs_diff;
using test::random_spd;
using test::rel_err;

TEST_CASE("cholesky_lower hand cases") {
    CHECK(max_abs_diff(cholesky_lower(SpdMatrix(Matrix::Identity(2, 2))).mat(),
                       Matrix::Identity(2, 2)) == 0.0);

    Matrix scalar(1, 1);
    scalar << 4.0;
    CHECK(cholesky_lower(SpdMatrix(scalar)).mat()(0, 0) == doctest::Approx(2.0));

    Matrix m(2, 2);
    m << 4, 2, 2, 2;
    Matrix want(2, 2);
    want << 2, 0, 1, 1;
    CHECK(max_abs_diff(cholesky_lower(SpdMatrix(m)).mat(), want) < 1e-15);
}

TEST_CASE("cholesky_lower rejects indefinite input") {
    Matrix m(2, 2);
    m << 1, 2, 2, 1;  // eigenvalues 3 and -1
    CHECK_THROWS_AS(cholesky_lower(SpdMatrix(m)), NotPositiveDefinite);
}

TEST_CASE("cholesky_lower reproduces random SPD matrices") {
    std::mt19937 gen(7);
    for (Index dim : {1, 2, 3, 10, 27, 50}) {
        const SpdMatrix m = random_spd(gen, dim);
        const LowerTriangular l = cholesky_lower(m);
        CHECK(rel_err(l.mat() * l.mat().transpose(), m.mat()) < 1e-10);
    }
}

TEST_CASE("invert_upper_triangular hand cases") {
    CHECK(max_abs_diff(invert_upper_triangular(UpperTriangular(Matrix::Identity(2, 2))).mat(),
                       Matrix::Identity(2, 2)) == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 2.0, 4.0;
    Matrix want = Matrix::Zero(2, 2);
    want.diagonal() << 0.5, 0.25;
    CHECK(max_abs_diff(invert_upper_triangular(UpperTriangular(d)).mat(), want) == 0.0);

    Matrix u(2, 2);
    u << 1, 1, 0, 1;
    Matrix wu(2, 2);
    wu << 1, -1, 0, 1;
    CHECK(max_abs_diff(invert_upper_triangular(UpperTriangular(u)).mat(), wu) == 0.0);
}

TEST_CASE("invert_upper_triangular rejects singular input") {
    Matrix u(2, 2);
    u << 1, 1, 0, 0;
    CHECK_THROWS_AS(invert_upper_triangular(UpperTriangular(u)), SingularTriangular);
}

TEST_CASE("invert_upper_triangular is an involution") {
    std::mt19937 gen(11);
    for (Index dim : {1, 3, 8, 20}) {
        Matrix u = test::random_matrix(gen, dim, dim);
        u.diagonal().array() += 3.0;  // keep well conditioned
        const UpperTriangular orig(u);
        const UpperTriangular twice = invert_upper_triangular(invert_upper_triangular(orig));
        CHECK(max_abs_diff(twice.mat(), orig.mat()) < 1e-12 * orig.mat().cwiseAbs().maxCoeff());
        CHECK(max_abs_diff(orig.mat() * invert_upper_triangular(orig).mat(),
                           Matrix::Identity(dim, dim)) < 1e-12);
    }
}

TEST_CASE("spd_inverse hand cases") {
    CHECK(max_abs_diff(spd_inverse(SpdMatrix(Matrix::Identity(3, 3))).mat(),
                       Matrix::Identity(3, 3)) == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 2.0, 4.0;
    Matrix want = Matrix::Zero(2, 2);
    want.diagonal() << 0.5, 0.25;
    CHECK(max_abs_diff(spd_inverse(SpdMatrix(d)).mat(), want) < 1e-15);

    // 2x2 adjugate: inv([[2,1],[1,1]]) = [[1,-1],[-1,2]]
    Matrix m(2, 2);
    m << 2, 1, 1, 1;
    Matrix wi(2, 2);
    wi << 1, -1, -1, 2;
    CHECK(max_abs_diff(spd_inverse(SpdMatrix(m)).mat(), wi) < 1e-14);
}

TEST_CASE("spd_inverse multiplies back to identity") {
    std::mt19937 gen(13);
    for (Index dim : {2, 5, 17, 40}) {
        const SpdMatrix m = random_spd(gen, dim);
        const SpdMatrix inv = spd_inverse(m);
        CHECK(rel_err(m.mat() * inv.mat(), Matrix::Identity(dim, dim)) < 1e-10);
        CHECK(max_abs_diff(inv.mat(), inv.mat().transpose()) == 0.0);
    }
}

TEST_CASE("upper_cholesky_of hand cases") {
    CHECK(max_abs_diff(upper_cholesky_of(SpdMatrix(Matrix::Identity(2, 2))).mat(),
                       Matrix::Identity(2, 2)) == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 4.0, 9.0;
    Matrix want = Matrix::Zero(2, 2);
    want.diagonal() << 2.0, 3.0;
    CHECK(max_abs_diff(upper_cholesky_of(SpdMatrix(d)).mat(), want) == 0.0);

    // Back-substitution on V V^T = [[2,1],[1,1]] gives V = [[1,1],[0,1]].
    Matrix m(2, 2);
    m << 2, 1, 1, 1;
    Matrix wv(2, 2);
    wv << 1, 1, 0, 1;
    CHECK(max_abs_diff(upper_cholesky_of(SpdMatrix(m)).mat(), wv) < 1e-15);
}

TEST_CASE("upper_cholesky_of reproduces random SPD matrices") {
    std::mt19937 gen(17);
    for (Index dim : {1, 2, 6, 21, 50}) {
        const SpdMatrix m = random_spd(gen, dim);
        const UpperTriangular v = upper_cholesky_of(m);
        CHECK(rel_err(v.mat() * v.mat().transpose(), m.mat()) < 1e-10);
        // strictly upper-triangular storage
        for (Index i = 0; i < dim; ++i) {
            for (Index j = 0; j < i; ++j) CHECK(v.mat()(i, j) == 0.0);
            CHECK(v.mat()(i, i) > 0.0);
        }
    }
}

TEST_CASE("inverse_cholesky_upper hand cases") {
    CHECK(max_abs_diff(inverse_cholesky_upper(SpdMatrix(Matrix::Identity(2, 2))).mat(),
                       Matrix::Identity(2, 2)) == 0.0);

    Matrix d = Matrix::Zero(2, 2);
    d.diagonal() << 4.0, 9.0;
    Matrix want = Matrix::Zero(2, 2);
    want.diagonal() << 0.5, 1.0 / 3.0;
    CHECK(max_abs_diff(inverse_cholesky_upper(SpdMatrix(d)).mat(), want) < 1e-16);

    // Back-substitution on F F^T = inv([[2,1],[1,1]]):
    // F = [[1/sqrt(2), -1/sqrt(2)], [0, sqrt(2)]]
    Matrix m(2, 2);
    m << 2, 1, 1, 1;
    Matrix wf(2, 2);
    const double s = std::sqrt(0.5);
    wf << s, -s, 0, std::sqrt(2.0);
    CHECK(max_abs_diff(inverse_cholesky_upper(SpdMatrix(m)).mat(), wf) < 1e-15);
}

TEST_CASE("inverse_cholesky_upper inverts random SPD matrices") {
    std::mt19937 gen(19);
    for (Index dim : {1, 4, 12, 33, 50}) {
        const SpdMatrix m = random_spd(gen, dim);
        const UpperTriangular f = inverse_cholesky_upper(m);
        CHECK(rel_err(f.mat() * f.mat().transpose() * m.mat(), Matrix::Identity(dim, dim)) <
              1e-9);
    }
}
