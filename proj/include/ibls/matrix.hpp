#pragma once

#include <Eigen/Dense>
#include <utility>

#include "ibls/errors.hpp"

namespace ibls {

using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline void require_dims(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

/// Symmetric positive definite k x k matrix. Symmetry is checked at
/// construction; positive definiteness is detected later by factorization.
class SpdMatrix {
  public:
    explicit SpdMatrix(Matrix m) : m_(std::move(m)) {
        require_dims(m_.rows() == m_.cols() && m_.rows() >= 1,
                     "SpdMatrix: square matrix required");
        const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
        if ((m_ - m_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw Error("SpdMatrix: not symmetric");
    }

    Index dim() const { return m_.rows(); }
    const Matrix& mat() const { return m_; }

  private:
    Matrix m_;
};

/// Upper-triangular matrix with the strict lower part stored as exact zeros.
class UpperTriangular {
  public:
    explicit UpperTriangular(Matrix m) : m_(std::move(m)) {
        require_dims(m_.rows() == m_.cols() && m_.rows() >= 1,
                     "UpperTriangular: square matrix required");
        m_.triangularView<Eigen::StrictlyLower>().setZero();
    }

    Index dim() const { return m_.rows(); }
    const Matrix& mat() const { return m_; }

  private:
    Matrix m_;
};

/// Lower-triangular matrix with the strict upper part stored as exact zeros.
class LowerTriangular {
  public:
    explicit LowerTriangular(Matrix m) : m_(std::move(m)) {
        require_dims(m_.rows() == m_.cols() && m_.rows() >= 1,
                     "LowerTriangular: square matrix required");
        m_.triangularView<Eigen::StrictlyUpper>().setZero();
    }

    Index dim() const { return m_.rows(); }
    const Matrix& mat() const { return m_; }

  private:
    Matrix m_;
};

}  // namespace ibls
