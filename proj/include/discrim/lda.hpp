#pragma once

#include <Eigen/Dense>

#include "discrim/dataset.hpp"

namespace discrim {

/// Fisher axes: eigenvectors of S = S_w - balance * S_b with the smallest
/// eigenvalues, as columns.
struct LdaModel {
  Eigen::MatrixXd q;            // d x m
  Eigen::VectorXd eigenvalues;  // m, ascending
};

/// Solves the difference-form Fisher criterion by a symmetric eigensolve of
/// S directly, so a singular S_w never blocks the fit. Equal eigenvalues are
/// ordered by index; each eigenvector's first nonzero entry is made positive.
LdaModel fit_lda(const LabeledDataset& data, double balance, Eigen::Index m);

} // namespace discrim
