#include "discrim/numeric.hpp"

#include <stdexcept>

namespace discrim {

double l21_norm(const Eigen::MatrixXd& z) {
  if (!z.allFinite()) throw std::invalid_argument("non-finite input");
  return z.rowwise().norm().sum();
}

Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& z, double tau) {
  if (tau < 0.0) throw std::invalid_argument("negative threshold");
  return z.array().sign() * (z.array().abs() - tau).max(0.0);
}

RowWeightDiag row_weight_matrix(const Eigen::MatrixXd& z, double epsilon) {
  if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
  RowWeightDiag d;
  d.epsilon = epsilon;
  d.weights = (z.rowwise().norm().array() + epsilon).inverse();
  return d;
}

} // namespace discrim
