#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "discrim/dataset.hpp"
#include "discrim/numeric.hpp"
#include "discrim/solver_config.hpp"

namespace discrim {

enum class InitKind { rslda, hybrid };

std::string to_string(InitKind kind);
InitKind init_kind_from_string(const std::string& s);

struct SdaGModel {
  Eigen::MatrixXd q;  // d x d projection
  Eigen::MatrixXd p;  // d x d, orthonormal columns
  std::vector<RowWeightDiag> d_list;  // one reweighting diagonal per class
  InitKind init_kind = InitKind::rslda;
  std::vector<double> history;  // surrogate objective per outer iteration
  SolverConfig config;
};

/// Exact criterion: Tr(q^T S q) + lambda1 * sum_i ||q^T X_i||_{2,1}
///                  + lambda2 * ||X - p q^T X||_F^2.
double objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                 const LabeledDataset& data, const SolverConfig& cfg);

/// Quadratic surrogate of the criterion at frozen reweighting diagonals:
/// the l2,1 term becomes lambda1 * sum_i Tr(X_i^T q D_i q^T X_i).
double objective_surrogate(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                           const std::vector<RowWeightDiag>& d_list,
                           const LabeledDataset& data, const SolverConfig& cfg);

/// Gradient of the surrogate w.r.t. q at frozen d_list:
/// 2 S q + lambda1 * sum_i 2 X_i X_i^T q D_i + 2 lambda2 (XX^T q - XX^T p).
Eigen::MatrixXd gradient_q(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                           const std::vector<RowWeightDiag>& d_list,
                           const LabeledDataset& data, const SolverConfig& cfg);

/// Orthogonal factor minimizing ||X - p q^T X||_F over p^T p = I, via the
/// Procrustes solution on X X^T q.
Eigen::MatrixXd update_p(const Eigen::MatrixXd& q, const LabeledDataset& data);

/// D_i = row_weight_matrix(q^T X_i, epsilon) per class.
std::vector<RowWeightDiag> update_d(const Eigen::MatrixXd& q,
                                    const LabeledDataset& data,
                                    double epsilon);

/// Initial projection from the RSLDA fit.
Eigen::MatrixXd init_rslda(const LabeledDataset& data, const SolverConfig& cfg);

/// Column splice: the C transposed regression directions followed by the
/// first d - C RSLDA columns. C > d keeps the first d directions only.
Eigen::MatrixXd init_hybrid(const Eigen::MatrixXd& q_ics,
                            const Eigen::MatrixXd& q_rslda);

/// Alternating minimization: Procrustes p-step, gradient q-step with a
/// halve-and-retry safeguard that keeps the recorded surrogate history
/// non-increasing, then reweighting update.
SdaGModel fit_sda_g(const LabeledDataset& data, const SolverConfig& cfg,
                    InitKind init);

/// Embedding q^T x; m > 0 restricts to the first m columns of q.
Eigen::MatrixXd transform(const SdaGModel& model, const Eigen::MatrixXd& x,
                          Eigen::Index m = -1);
Eigen::MatrixXd transform(const Eigen::MatrixXd& q, const Eigen::MatrixXd& x,
                          Eigen::Index m = -1);

} // namespace discrim
