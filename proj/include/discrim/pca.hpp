#pragma once

#include <Eigen/Dense>
#include <utility>

#include "discrim/dataset.hpp"

namespace discrim {

/// Rank-revealing PCA basis fitted on training data.
struct PcaBasis {
  Eigen::VectorXd mean;   // d_raw
  Eigen::MatrixXd basis;  // d_raw x r, orthonormal columns
  Eigen::Index rank = 0;
  bool zero_variance = false;

  /// Projects raw samples (d_raw x k) into the retained subspace (r x k).
  Eigen::MatrixXd project(const Eigen::MatrixXd& x) const;
  /// Lifts projected samples back to centered raw coordinates.
  Eigen::MatrixXd back_project(const Eigen::MatrixXd& z) const;
};

/// Centers the data and keeps every component with singular value above
/// 1e-10 * sigma_max (full numerical rank, lossless up to rounding). A
/// zero-variance dataset keeps rank 1 and sets the flag instead of failing.
std::pair<PcaBasis, LabeledDataset> pca_preprocess(const LabeledDataset& data);

} // namespace discrim
