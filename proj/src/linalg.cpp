#include "cspline/linalg.hpp"

#include <stdexcept>

#include <Eigen/Dense>

namespace cspline {

namespace {

void require_finite(const Eigen::MatrixXd& A, const char* what) {
    if (!A.allFinite()) {
        throw std::invalid_argument(std::string("linalg: non-finite entries in ") + what);
    }
}

void require_tol(double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("linalg: tolerance must be positive");
}

}  // namespace

LeastSquaresResult least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& z,
                                 double tol) {
    require_finite(A, "matrix");
    require_finite(z, "right-hand side");
    require_tol(tol);
    if (A.rows() < 1 || A.cols() < 1) {
        throw std::invalid_argument("linalg: least_squares needs a non-empty matrix");
    }
    if (A.rows() != z.size()) {
        throw std::invalid_argument("linalg: matrix and right-hand side sizes disagree");
    }

    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(A);
    cod.setThreshold(tol);
    LeastSquaresResult result;
    result.solution = cod.solve(z);
    result.effective_rank = static_cast<int>(cod.rank());
    result.residual_norm = (A * result.solution - z).norm();
    return result;
}

int numerical_rank(const Eigen::MatrixXd& A, double tol) {
    require_finite(A, "matrix");
    require_tol(tol);
    if (A.rows() == 0 || A.cols() == 0) return 0;
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A);
    qr.setThreshold(tol);
    return static_cast<int>(qr.rank());
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, double tol) {
    require_finite(A, "matrix");
    require_tol(tol);
    const Eigen::Index n = A.cols();
    if (n == 0) return Eigen::MatrixXd(0, 0);
    if (A.rows() == 0) return Eigen::MatrixXd::Identity(n, n);

    // Q from the pivoted QR of A^T splits into an orthonormal basis of
    // range(A^T) (first r columns) and of its complement, the null space.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(A.transpose());
    qr.setThreshold(tol);
    const Eigen::Index rank = qr.rank();
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
    return q.rightCols(n - rank);
}

}  // namespace cspline
