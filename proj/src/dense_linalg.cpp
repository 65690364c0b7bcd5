#include "ibls/dense_linalg.hpp"

#include <cmath>

namespace ibls {

LowerTriangular cholesky_lower(const SpdMatrix& m) {
    const Index n = m.dim();
    const Matrix& a = m.mat();
    Matrix l = Matrix::Zero(n, n);
    for (Index j = 0; j < n; ++j) {
        double d = a(j, j);
        for (Index t = 0; t < j; ++t) d -= l(j, t) * l(j, t);
        if (!(d > 0.0) || !std::isfinite(d))
            throw NotPositiveDefinite("cholesky_lower: nonpositive pivot at column " +
                                      std::to_string(j));
        const double ljj = std::sqrt(d);
        l(j, j) = ljj;
        for (Index i = j + 1; i < n; ++i) {
            double s = a(i, j);
            for (Index t = 0; t < j; ++t) s -= l(i, t) * l(j, t);
            l(i, j) = s / ljj;
        }
    }
    return LowerTriangular(std::move(l));
}

UpperTriangular invert_upper_triangular(const UpperTriangular& u) {
    const Index n = u.dim();
    const Matrix& a = u.mat();
    for (Index i = 0; i < n; ++i) {
        const double d = a(i, i);
        if (d == 0.0 || !std::isfinite(d))
            throw SingularTriangular("invert_upper_triangular: zero diagonal at " +
                                     std::to_string(i));
    }
    Matrix x = Matrix::Zero(n, n);
    // Column j of the inverse solves U x = e_j; only rows 0..j are nonzero.
    for (Index j = 0; j < n; ++j) {
        x(j, j) = 1.0 / a(j, j);
        for (Index i = j - 1; i >= 0; --i) {
            double s = 0.0;
            for (Index t = i + 1; t <= j; ++t) s += a(i, t) * x(t, j);
            x(i, j) = -s / a(i, i);
        }
    }
    return UpperTriangular(std::move(x));
}

SpdMatrix spd_inverse(const SpdMatrix& m) {
    // M = L L^T, so M^{-1} = L^{-T} L^{-1} = W W^T with W = (L^{-1})^T.
    const LowerTriangular l = cholesky_lower(m);
    const UpperTriangular w = invert_upper_triangular(UpperTriangular(l.mat().transpose()));
    Matrix inv = w.mat() * w.mat().transpose();
    inv = 0.5 * (inv + inv.transpose().eval());
    return SpdMatrix(std::move(inv));
}

UpperTriangular upper_cholesky_of(const SpdMatrix& m) {
    const Index n = m.dim();
    Matrix rev = m.mat().reverse();
    const LowerTriangular l = cholesky_lower(SpdMatrix(std::move(rev)));
    Matrix v(n, n);
    v = l.mat().reverse();
    return UpperTriangular(std::move(v));
}

UpperTriangular inverse_cholesky_upper(const SpdMatrix& m) {
    const LowerTriangular l = cholesky_lower(m);
    const UpperTriangular li = invert_upper_triangular(UpperTriangular(l.mat().transpose()));
    // li = (L^T)^{-1} = (L^{-1})^T, already the upper factor of M^{-1}.
    return li;
}

}  // namespace ibls
