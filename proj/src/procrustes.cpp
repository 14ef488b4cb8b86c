#include "discrim/procrustes.hpp"

#include <stdexcept>

namespace discrim {

ProcrustesResult procrustes_orthogonal(const Eigen::MatrixXd& m) {
  if (m.rows() < m.cols())
    throw std::invalid_argument("need k <= d for orthonormal columns");
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  ProcrustesResult out;
  out.q = svd.matrixU() * svd.matrixV().transpose();
  const auto& sv = svd.singularValues();
  const double smax = sv.size() > 0 ? sv[0] : 0.0;
  out.rank_deficient = smax <= 0.0 || sv[sv.size() - 1] <= 1e-12 * smax;
  return out;
}

} // namespace discrim
