#include "discrim/ics_dlsr.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "discrim/numeric.hpp"

namespace discrim {

LabelMatrix build_label_matrix(const LabeledDataset& data) {
  Eigen::MatrixXd y =
      Eigen::MatrixXd::Zero(data.num_classes(), data.size());
  for (Eigen::Index j = 0; j < data.size(); ++j) y(data.labels[j], j) = 1.0;
  return {std::move(y)};
}

double ics_dlsr_objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& e,
                          const LabeledDataset& data, const Eigen::MatrixXd& y,
                          const SolverConfig& cfg) {
  double obj = 0.5 * (y + e - q * data.samples).squaredNorm() +
               0.5 * cfg.lambda1 * q.squaredNorm() +
               cfg.lambda3 * l21_norm(e);
  for (int i = 0; i < data.num_classes(); ++i)
    obj += cfg.lambda2 * l21_norm(q * data.class_matrix(i));
  return obj;
}

namespace {

// Row-wise l2,1 proximal shrinkage, epsilon-smoothed through the
// reweighting diagonal: row_j -> max(0, 1 - tau * w_j) * row_j.
Eigen::MatrixXd row_shrink(const Eigen::MatrixXd& v, double tau,
                           double epsilon) {
  const RowWeightDiag w = row_weight_matrix(v, epsilon);
  Eigen::MatrixXd out = v;
  for (Eigen::Index j = 0; j < v.rows(); ++j)
    out.row(j) *= std::max(0.0, 1.0 - tau * w.weights[j]);
  return out;
}

} // namespace

IcsDlsrModel fit_ics_dlsr(const LabeledDataset& data, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.lambda1 <= 0.0)
    throw std::invalid_argument("lambda1 must be positive");

  const Eigen::MatrixXd& x = data.samples;
  const int c = data.num_classes();
  const Eigen::Index d = data.dim();
  const Eigen::MatrixXd y = build_label_matrix(data).y;
  const Eigen::MatrixXd xxt = x * x.transpose();

  std::vector<std::vector<Eigen::Index>> class_idx;
  for (int i = 0; i < c; ++i) class_idx.push_back(data.class_indices(i));

  // ADMM working state; the returned model tracks the incumbent, i.e. the
  // best (q, e) pair seen so far under the plain objective.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(c, d);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(c, x.cols());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(c, x.cols());
  Eigen::MatrixXd mult = Eigen::MatrixXd::Zero(c, x.cols());

  double mu = 0.1;
  const double rho = 1.1;
  const double mu_max = 1e6;
  const bool with_t = cfg.lambda2 > 0.0;

  IcsDlsrModel model;
  double best = std::numeric_limits<double>::infinity();
  double prev_obj = std::numeric_limits<double>::infinity();
  model.max_iter_reached = true;
  for (int it = 0; it < cfg.max_iter; ++it) {
    // Q-update: normal equations of the quadratic terms.
    Eigen::MatrixXd lhs = with_t ? ((1.0 + mu) * xxt).eval() : xxt;
    lhs.diagonal().array() += cfg.lambda1;
    Eigen::MatrixXd rhs = (y + e) * x.transpose();
    if (with_t) rhs += (mu * t + mult) * x.transpose();
    q = lhs.ldlt().solve(rhs.transpose()).transpose();

    const Eigen::MatrixXd qx = q * x;

    if (with_t) {
      const Eigen::MatrixXd target = qx - mult / mu;
      for (int i = 0; i < c; ++i) {
        const auto& idx = class_idx[i];
        Eigen::MatrixXd block(c, static_cast<Eigen::Index>(idx.size()));
        for (std::size_t k = 0; k < idx.size(); ++k)
          block.col(static_cast<Eigen::Index>(k)) = target.col(idx[k]);
        block = row_shrink(block, cfg.lambda2 / mu, cfg.epsilon);
        for (std::size_t k = 0; k < idx.size(); ++k)
          t.col(idx[k]) = block.col(static_cast<Eigen::Index>(k));
      }
      mult += mu * (t - qx);
      mu = std::min(rho * mu, mu_max);
    }

    // E-update: l2,1 prox of the residual; lambda3 = 0 keeps E at zero.
    if (cfg.lambda3 > 0.0) e = row_shrink(qx - y, cfg.lambda3, cfg.epsilon);

    const double obj = ics_dlsr_objective(q, e, data, y, cfg);
    if (obj < best) {
      best = obj;
      model.q = q;
      model.e = e;
    }
    model.history.push_back(best);
    if (std::abs(prev_obj - obj) < cfg.tol * (1.0 + std::abs(obj))) {
      model.max_iter_reached = false;
      break;
    }
    prev_obj = obj;
  }
  return model;
}

} // namespace discrim
