#include "discrim/pca.hpp"

#include <stdexcept>

namespace discrim {

Eigen::MatrixXd PcaBasis::project(const Eigen::MatrixXd& x) const {
  if (x.rows() != mean.size())
    throw std::invalid_argument("feature dimension mismatch");
  return basis.transpose() * (x.colwise() - mean);
}

Eigen::MatrixXd PcaBasis::back_project(const Eigen::MatrixXd& z) const {
  if (z.rows() != rank) throw std::invalid_argument("rank mismatch");
  return basis * z;
}

std::pair<PcaBasis, LabeledDataset> pca_preprocess(const LabeledDataset& data) {
  if (data.size() < 2) throw std::invalid_argument("need at least 2 samples");
  PcaBasis pb;
  pb.mean = data.samples.rowwise().mean();
  const Eigen::MatrixXd centered = data.samples.colwise() - pb.mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  Eigen::Index r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv[i] > 1e-10 * smax) ++r;
  if (r == 0) {  // all samples identical
    r = 1;
    pb.zero_variance = true;
  }
  pb.rank = r;
  pb.basis = svd.matrixU().leftCols(r);
  LabeledDataset projected = make_dataset(pb.basis.transpose() * centered,
                                          data.labels, data.num_classes());
  return {std::move(pb), std::move(projected)};
}

} // namespace discrim
