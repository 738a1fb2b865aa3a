#pragma once

#include <Eigen/Dense>
#include <string>

#include "likert/errors.hpp"

namespace likert {

struct OlsFit {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd residuals;
    double ssr = 0;
};

/// Least squares of y on the columns of X via column-pivoted QR.
/// Requires more rows than columns and full column rank.
inline OlsFit ols_fit(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    if (X.rows() != y.size() || X.rows() <= X.cols())
        throw ComputationError(Errc::too_few_observations,
                               "need more observations (" + std::to_string(X.rows()) +
                                   ") than regressors (" + std::to_string(X.cols()) + ")");
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(X);
    if (qr.rank() < X.cols())
        throw ComputationError(Errc::rank_deficient,
                               "regressor matrix is rank deficient (rank " +
                                   std::to_string(qr.rank()) + " of " +
                                   std::to_string(X.cols()) + ")");
    OlsFit fit;
    fit.coefficients = qr.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.ssr = fit.residuals.squaredNorm();
    return fit;
}

/// Minimum-norm least squares; tolerates rank-deficient designs (degenerate
/// series such as constants would otherwise make every AR candidate fail).
inline OlsFit ols_fit_minimum_norm(const Eigen::MatrixXd& X, const Eigen::VectorXd& y) {
    if (X.rows() != y.size() || X.rows() <= X.cols())
        throw ComputationError(Errc::too_few_observations,
                               "need more observations (" + std::to_string(X.rows()) +
                                   ") than regressors (" + std::to_string(X.cols()) + ")");
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(X);
    OlsFit fit;
    fit.coefficients = cod.solve(y);
    fit.residuals = y - X * fit.coefficients;
    fit.ssr = fit.residuals.squaredNorm();
    return fit;
}

} // namespace likert
