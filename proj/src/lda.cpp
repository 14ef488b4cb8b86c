#include "discrim/lda.hpp"

#include <stdexcept>

#include "discrim/scatter.hpp"

namespace discrim {

LdaModel fit_lda(const LabeledDataset& data, double balance, Eigen::Index m) {
  if (m < 1 || m > data.dim())
    throw std::invalid_argument("dimension exceeds features");
  const ScatterSet sc = compute_scatter(data, balance);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sc.s);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("eigensolve failed");

  LdaModel model;
  model.q = es.eigenvectors().leftCols(m);   // ascending eigenvalues
  model.eigenvalues = es.eigenvalues().head(m);
  // Sign convention: first entry above rounding noise made positive.
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < model.q.rows(); ++k) {
      if (std::abs(model.q(k, j)) > 1e-12) {
        if (model.q(k, j) < 0.0) model.q.col(j) = -model.q.col(j);
        break;
      }
    }
  }
  return model;
}

} // namespace discrim
