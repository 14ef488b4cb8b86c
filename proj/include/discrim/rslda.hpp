#pragma once

#include <Eigen/Dense>
#include <vector>

#include "discrim/dataset.hpp"
#include "discrim/solver_config.hpp"

namespace discrim {

struct RsldaModel {
  Eigen::MatrixXd q;  // d x d projection
  Eigen::MatrixXd p;  // d x d, orthonormal columns
  Eigen::MatrixXd e;  // d x N error matrix
  std::vector<double> history;  // incumbent objective per iteration
  double residual = 0.0;        // relative feasibility of the returned triple
  bool max_iter_reached = false;
};

/// Objective: Tr(q^T S q) + lambda1 * ||q||_{2,1} + lambda2 * ||e||_1.
double rslda_objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& e,
                       const Eigen::MatrixXd& s, double lambda1,
                       double lambda2);

/// Augmented-Lagrangian ADMM for the row-sparse projection with orthogonal
/// reconstruction factor, constraint X = P q^T X + E. The returned model is
/// the incumbent: the best (q, p) iterate completed to an exactly feasible
/// triple by e = X - P q^T X, so the history is non-increasing and ends at
/// the returned objective. Deterministic: fixed inputs give bitwise-identical
/// histories.
RsldaModel fit_rslda(const LabeledDataset& data, const SolverConfig& cfg);

} // namespace discrim
