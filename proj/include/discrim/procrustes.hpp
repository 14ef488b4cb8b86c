#pragma once

#include <Eigen/Dense>

namespace discrim {

struct ProcrustesResult {
  Eigen::MatrixXd q;         // d x k, orthonormal columns
  bool rank_deficient = false;
};

/// Closest column-orthonormal matrix to m: U * V^T from the thin SVD.
/// Maximizes Tr(P^T m) over P^T P = I. Rank-deficient inputs are resolved by
/// the SVD's basis completion and flagged.
ProcrustesResult procrustes_orthogonal(const Eigen::MatrixXd& m);

} // namespace discrim
