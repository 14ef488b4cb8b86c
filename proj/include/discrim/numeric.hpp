#pragma once

#include <Eigen/Dense>

namespace discrim {

/// Sum of Euclidean norms of the rows of z. Throws on non-finite input.
double l21_norm(const Eigen::MatrixXd& z);

/// Elementwise sign(z) * max(|z| - tau, 0).
Eigen::MatrixXd soft_threshold(const Eigen::MatrixXd& z, double tau);

/// Diagonal reweighting matrix: weights[j] = 1 / (||row j||_2 + epsilon).
struct RowWeightDiag {
  Eigen::VectorXd weights;
  double epsilon = 0.0;

  Eigen::DiagonalMatrix<double, Eigen::Dynamic> asDiagonal() const {
    return weights.asDiagonal();
  }
};

RowWeightDiag row_weight_matrix(const Eigen::MatrixXd& z, double epsilon);

} // namespace discrim
