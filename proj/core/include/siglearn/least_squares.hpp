#pragma once

#include <Eigen/Dense>

namespace siglearn {

/// Weighted least squares: argmin over beta of sum_i w_i (b_i - A_i . beta)^2.
/// Solved by column-pivoted Householder QR on the sqrt(w)-scaled rows rather
/// than the normal equations. Throws std::invalid_argument on shape/weight
/// violations and std::runtime_error naming a dependent column when the
/// weighted design is rank deficient.
Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& A,
                                    const Eigen::VectorXd& b,
                                    const Eigen::VectorXd& w);

}  // namespace siglearn
