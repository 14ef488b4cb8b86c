#include "discrim/scatter.hpp"

#include <stdexcept>

namespace discrim {

ScatterSet compute_scatter(const LabeledDataset& data, double balance) {
  if (data.size() < 2) throw std::invalid_argument("need at least 2 samples");
  if (balance <= 0.0) throw std::invalid_argument("balance must be positive");
  for (int i = 0; i < data.num_classes(); ++i)
    if (data.class_counts[i] == 0) throw std::invalid_argument("empty class");

  const Eigen::Index d = data.dim();
  const double n = static_cast<double>(data.size());
  const Eigen::VectorXd mu = data.samples.rowwise().mean();

  ScatterSet out;
  out.balance = balance;
  out.s_w = Eigen::MatrixXd::Zero(d, d);
  out.s_b = Eigen::MatrixXd::Zero(d, d);

  for (int i = 0; i < data.num_classes(); ++i) {
    const Eigen::MatrixXd xi = data.class_matrix(i);
    const Eigen::VectorXd mu_i = xi.rowwise().mean();
    const Eigen::VectorXd db = mu_i - mu;
    out.s_b.noalias() += (static_cast<double>(xi.cols()) / n) * db * db.transpose();
    const Eigen::MatrixXd centered = xi.colwise() - mu_i;
    out.s_w.noalias() += centered * centered.transpose() / n;
  }
  // Symmetrize away rounding drift.
  out.s_w = 0.5 * (out.s_w + out.s_w.transpose()).eval();
  out.s_b = 0.5 * (out.s_b + out.s_b.transpose()).eval();
  out.s = out.s_w - balance * out.s_b;
  return out;
}

} // namespace discrim
