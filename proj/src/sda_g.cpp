#include "discrim/sda_g.hpp"

#include <cmath>
#include <stdexcept>

#include "discrim/ics_dlsr.hpp"
#include "discrim/procrustes.hpp"
#include "discrim/rslda.hpp"
#include "discrim/scatter.hpp"

namespace discrim {

std::string to_string(InitKind kind) {
  return kind == InitKind::rslda ? "rslda" : "hybrid";
}

InitKind init_kind_from_string(const std::string& s) {
  if (s == "rslda") return InitKind::rslda;
  if (s == "hybrid") return InitKind::hybrid;
  throw std::invalid_argument("unknown init kind: " + s);
}

double objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                 const LabeledDataset& data, const SolverConfig& cfg) {
  const ScatterSet sc = compute_scatter(data, cfg.balance);
  double obj = (q.transpose() * sc.s * q).trace();
  for (int i = 0; i < data.num_classes(); ++i)
    obj += cfg.lambda1 * l21_norm(q.transpose() * data.class_matrix(i));
  obj += cfg.lambda2 *
         (data.samples - p * q.transpose() * data.samples).squaredNorm();
  return obj;
}

double objective_surrogate(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                           const std::vector<RowWeightDiag>& d_list,
                           const LabeledDataset& data,
                           const SolverConfig& cfg) {
  const ScatterSet sc = compute_scatter(data, cfg.balance);
  double obj = (q.transpose() * sc.s * q).trace();
  for (int i = 0; i < data.num_classes(); ++i) {
    const Eigen::MatrixXd z = q.transpose() * data.class_matrix(i);
    obj += cfg.lambda1 *
           (z.array().square().rowwise().sum() *
            d_list[static_cast<std::size_t>(i)].weights.array())
               .sum();
  }
  obj += cfg.lambda2 *
         (data.samples - p * q.transpose() * data.samples).squaredNorm();
  return obj;
}

Eigen::MatrixXd gradient_q(const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                           const std::vector<RowWeightDiag>& d_list,
                           const LabeledDataset& data,
                           const SolverConfig& cfg) {
  const ScatterSet sc = compute_scatter(data, cfg.balance);
  const Eigen::MatrixXd xxt = data.samples * data.samples.transpose();
  Eigen::MatrixXd g = 2.0 * sc.s * q;
  for (int i = 0; i < data.num_classes(); ++i) {
    const Eigen::MatrixXd xi = data.class_matrix(i);
    g.noalias() +=
        2.0 * cfg.lambda1 * (xi * (xi.transpose() * q)) *
        d_list[static_cast<std::size_t>(i)].asDiagonal();
  }
  g.noalias() += 2.0 * cfg.lambda2 * (xxt * q - xxt * p);
  return g;
}

Eigen::MatrixXd update_p(const Eigen::MatrixXd& q, const LabeledDataset& data) {
  return procrustes_orthogonal(data.samples * data.samples.transpose() * q).q;
}

std::vector<RowWeightDiag> update_d(const Eigen::MatrixXd& q,
                                    const LabeledDataset& data,
                                    double epsilon) {
  std::vector<RowWeightDiag> out;
  out.reserve(static_cast<std::size_t>(data.num_classes()));
  for (int i = 0; i < data.num_classes(); ++i)
    out.push_back(
        row_weight_matrix(q.transpose() * data.class_matrix(i), epsilon));
  return out;
}

Eigen::MatrixXd init_rslda(const LabeledDataset& data,
                           const SolverConfig& cfg) {
  return fit_rslda(data, cfg).q;
}

Eigen::MatrixXd init_hybrid(const Eigen::MatrixXd& q_ics,
                            const Eigen::MatrixXd& q_rslda) {
  const Eigen::Index d = q_rslda.rows();
  if (q_rslda.cols() != d) throw std::invalid_argument("q_rslda must be d x d");
  if (q_ics.cols() != d)
    throw std::invalid_argument("regression map feature dimension mismatch");
  const Eigen::Index c = std::min<Eigen::Index>(q_ics.rows(), d);
  Eigen::MatrixXd q0(d, d);
  q0.leftCols(c) = q_ics.topRows(c).transpose();
  if (c < d) q0.rightCols(d - c) = q_rslda.leftCols(d - c);
  return q0;
}

SdaGModel fit_sda_g(const LabeledDataset& data, const SolverConfig& cfg,
                    InitKind init) {
  cfg.validate();

  SdaGModel model;
  model.config = cfg;
  model.init_kind = init;
  if (init == InitKind::rslda) {
    model.q = init_rslda(data, cfg);
  } else {
    const IcsDlsrModel ics = fit_ics_dlsr(data, cfg);
    model.q = init_hybrid(ics.q, init_rslda(data, cfg));
  }

  // Hoisted per-fit state; the safeguard loop re-evaluates the surrogate
  // several times per iteration.
  const ScatterSet sc = compute_scatter(data, cfg.balance);
  const Eigen::MatrixXd xxt = data.samples * data.samples.transpose();
  std::vector<Eigen::MatrixXd> class_mats;
  for (int i = 0; i < data.num_classes(); ++i)
    class_mats.push_back(data.class_matrix(i));

  const auto make_d = [&](const Eigen::MatrixXd& q) {
    std::vector<RowWeightDiag> out;
    out.reserve(class_mats.size());
    for (const auto& xi : class_mats)
      out.push_back(row_weight_matrix(q.transpose() * xi, cfg.epsilon));
    return out;
  };
  const auto surrogate = [&](const Eigen::MatrixXd& q, const Eigen::MatrixXd& p,
                             const std::vector<RowWeightDiag>& d_list) {
    double obj = (q.transpose() * sc.s * q).trace();
    for (std::size_t i = 0; i < class_mats.size(); ++i) {
      const Eigen::MatrixXd z = q.transpose() * class_mats[i];
      obj += cfg.lambda1 * (z.array().square().rowwise().sum() *
                            d_list[i].weights.array())
                               .sum();
    }
    obj += cfg.lambda2 *
           (data.samples - p * q.transpose() * data.samples).squaredNorm();
    return obj;
  };
  const auto p_step = [&](const Eigen::MatrixXd& q) {
    return procrustes_orthogonal(xxt * q).q;
  };

  model.p = p_step(model.q);
  model.d_list = make_d(model.q);
  double recorded = surrogate(model.q, model.p, model.d_list);
  model.history.push_back(recorded);

  for (int it = 1; it < cfg.max_iter; ++it) {
    Eigen::MatrixXd g = 2.0 * sc.s * model.q;
    for (std::size_t i = 0; i < class_mats.size(); ++i)
      g.noalias() += 2.0 * cfg.lambda1 *
                     (class_mats[i] * (class_mats[i].transpose() * model.q)) *
                     model.d_list[i].asDiagonal();
    g.noalias() += 2.0 * cfg.lambda2 * (xxt * model.q - xxt * model.p);

    // Candidate full iteration at step alpha; halve on objective increase.
    double step = cfg.alpha;
    bool accepted = false;
    Eigen::MatrixXd q_new, p_new;
    std::vector<RowWeightDiag> d_new;
    double obj_new = recorded;
    for (int attempt = 0; attempt < 21 && !accepted; ++attempt) {
      q_new = model.q - step * g;
      p_new = p_step(q_new);
      d_new = make_d(q_new);
      obj_new = surrogate(q_new, p_new, d_new);
      if (!std::isfinite(obj_new))
        throw std::runtime_error("divergence: reduce alpha");
      if (obj_new <= recorded || step == 0.0) {
        accepted = true;
      } else {
        step *= 0.5;
      }
    }
    if (!accepted) {
      // No step length made progress; hold the current iterate.
      model.history.push_back(recorded);
      break;
    }
    model.q = q_new;
    model.p = p_new;
    model.d_list = d_new;
    const double prev = recorded;
    recorded = obj_new;
    model.history.push_back(recorded);
    if (std::abs(prev - recorded) < cfg.tol * (1.0 + std::abs(recorded)))
      break;
  }
  return model;
}

Eigen::MatrixXd transform(const Eigen::MatrixXd& q, const Eigen::MatrixXd& x,
                          Eigen::Index m) {
  if (q.rows() != x.rows())
    throw std::invalid_argument("feature dimension mismatch");
  if (m < 0) m = q.cols();
  if (m > q.cols()) throw std::invalid_argument("dimension exceeds projection");
  return q.leftCols(m).transpose() * x;
}

Eigen::MatrixXd transform(const SdaGModel& model, const Eigen::MatrixXd& x,
                          Eigen::Index m) {
  return transform(model.q, x, m);
}

} // namespace discrim
