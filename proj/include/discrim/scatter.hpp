#pragma once

#include <Eigen/Dense>

#include "discrim/dataset.hpp"

namespace discrim {

/// Within/between-class scatter matrices and their weighted difference
/// s = s_w - balance * s_b.
struct ScatterSet {
  Eigen::MatrixXd s_w;
  Eigen::MatrixXd s_b;
  Eigen::MatrixXd s;
  double balance = 0.0;
};

/// Scatter construction with 1/N weighting: s_b sums n_i-weighted outer
/// products of class-mean deviations from the global mean, s_w sums sample
/// deviations from the class means.
ScatterSet compute_scatter(const LabeledDataset& data, double balance);

} // namespace discrim
