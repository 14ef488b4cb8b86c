#pragma once

#include <Eigen/Dense>
#include <vector>

#include "discrim/dataset.hpp"
#include "discrim/solver_config.hpp"

namespace discrim {

struct LabelMatrix {
  Eigen::MatrixXd y;  // C x N, one-hot columns
};

LabelMatrix build_label_matrix(const LabeledDataset& data);

struct IcsDlsrModel {
  Eigen::MatrixXd q;  // C x d regression map onto soft labels
  Eigen::MatrixXd e;  // C x N slack
  std::vector<double> history;  // incumbent objective per iteration
  bool max_iter_reached = false;
};

/// Objective: 1/2 ||Y + E - qX||_F^2 + lambda1/2 ||q||_F^2
///            + lambda2 * sum_i ||q X_i||_{2,1} + lambda3 * ||E||_{2,1}.
double ics_dlsr_objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& e,
                          const LabeledDataset& data, const Eigen::MatrixXd& y,
                          const SolverConfig& cfg);

/// Label regression with class-wise row sparsity, solved by ADMM on an
/// auxiliary variable T = qX whose class blocks carry the l2,1 terms via
/// diagonal reweighting. lambda3 = 0 pins E to zero (the slack term would
/// otherwise absorb the fit entirely). With lambda2 = lambda3 = 0 the fit
/// is the ridge closed form Y X^T (X X^T + lambda1 I)^{-1}. The returned
/// (q, e) is the incumbent (best objective seen), so the history is
/// non-increasing.
IcsDlsrModel fit_ics_dlsr(const LabeledDataset& data, const SolverConfig& cfg);

} // namespace discrim
