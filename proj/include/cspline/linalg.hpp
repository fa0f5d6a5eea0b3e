#pragma once

#include <Eigen/Core>

#include "cspline/types.hpp"

namespace cspline {

/// Solution of a dense least-squares problem.
struct LeastSquaresResult {
    Eigen::VectorXd solution;
    int effective_rank = 0;
    double residual_norm = 0.0;
};

/// Minimizes |A*b - z|_2 via a rank-revealing orthogonal factorization with
/// relative pivot threshold tol. Rank-deficient systems yield the
/// minimum-norm minimizer. Throws std::invalid_argument on non-finite input.
LeastSquaresResult least_squares(const Eigen::MatrixXd& A, const Eigen::VectorXd& z,
                                 double tol = kDefaultTol);

/// Count of factorization diagonal magnitudes exceeding tol times the largest.
int numerical_rank(const Eigen::MatrixXd& A, double tol = kDefaultTol);

/// Orthonormal basis of the null space of A, computed from an orthogonal
/// factorization of the transpose. The result has A.cols() rows and
/// A.cols() - numerical_rank(A, tol) columns.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& A, double tol = kDefaultTol);

}  // namespace cspline
