#include "siglearn/least_squares.hpp"

#include <stdexcept>
#include <string>

namespace siglearn {

Eigen::VectorXd solve_least_squares(const Eigen::MatrixXd& A,
                                    const Eigen::VectorXd& b,
                                    const Eigen::VectorXd& w) {
  const Eigen::Index m = A.rows();
  const Eigen::Index p = A.cols();
  if (m < 1 || p < 1) throw std::invalid_argument("solve_least_squares: empty design");
  if (b.size() != m || w.size() != m)
    throw std::invalid_argument("solve_least_squares: length mismatch");
  if (m < p)
    throw std::invalid_argument("solve_least_squares: fewer rows than coefficients");
  if (!(w.array() > 0.0).all() || !w.allFinite())
    throw std::invalid_argument("solve_least_squares: weights must be positive finite");

  const Eigen::ArrayXd root_w = w.array().sqrt();
  const Eigen::MatrixXd scaled = root_w.matrix().asDiagonal() * A;
  const Eigen::VectorXd target = (root_w * b.array()).matrix();

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(scaled);
  if (qr.rank() < p) {
    const int dependent = qr.colsPermutation().indices()(qr.rank());
    throw std::runtime_error("solve_least_squares: rank-deficient design, column " +
                             std::to_string(dependent) + " is linearly dependent");
  }
  return qr.solve(target);
}

}  // namespace siglearn
