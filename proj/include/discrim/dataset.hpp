#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace discrim {

/// Column-oriented labeled dataset: samples are the columns of a d x N matrix.
struct LabeledDataset {
  Eigen::MatrixXd samples;      // d x N, one sample per column
  Eigen::VectorXi labels;       // N, values in {0..C-1}
  Eigen::VectorXi class_counts; // C, n_i per class

  Eigen::Index dim() const { return samples.rows(); }
  Eigen::Index size() const { return samples.cols(); }
  int num_classes() const { return static_cast<int>(class_counts.size()); }

  /// Columns of class i, in original column order (d x n_i).
  Eigen::MatrixXd class_matrix(int i) const;

  /// Column indices of class i, ascending.
  std::vector<Eigen::Index> class_indices(int i) const;
};

/// Builds a dataset from a sample matrix and labels; counts classes as
/// max(label)+1 unless num_classes forces more. Throws on empty classes or
/// out-of-range labels.
LabeledDataset make_dataset(Eigen::MatrixXd samples, Eigen::VectorXi labels,
                            int num_classes = -1);

/// CSV: one sample per row, first column = integer label, rest = features.
/// Lines starting with '#' are skipped. Loading transposes to column layout.
LabeledDataset load_csv(const std::string& path);
void save_csv(const LabeledDataset& data, const std::string& path);

} // namespace discrim
