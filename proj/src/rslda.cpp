#include "discrim/rslda.hpp"

#include <limits>
#include <stdexcept>

#include "discrim/numeric.hpp"
#include "discrim/procrustes.hpp"
#include "discrim/scatter.hpp"

namespace discrim {

namespace {

// Symmetric solve with escalating ridge when the factorization is unreliable.
Eigen::MatrixXd solve_sym(Eigen::MatrixXd a, const Eigen::MatrixXd& rhs) {
  const double base = 1e-10 * a.trace() / static_cast<double>(a.rows());
  double ridge = 0.0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::MatrixXd reg = a;
    if (ridge > 0.0)
      reg.diagonal().array() += ridge;
    Eigen::LDLT<Eigen::MatrixXd> ldlt(reg);
    if (ldlt.info() == Eigen::Success) {
      Eigen::MatrixXd x = ldlt.solve(rhs);
      const double rel =
          (reg * x - rhs).norm() / (rhs.norm() + 1e-300);
      if (rel < 1e-8) return x;
    }
    ridge = ridge == 0.0 ? std::max(base, 1e-300) : ridge * 100.0;
  }
  throw std::runtime_error("symmetric solve failed");
}

} // namespace

double rslda_objective(const Eigen::MatrixXd& q, const Eigen::MatrixXd& e,
                       const Eigen::MatrixXd& s, double lambda1,
                       double lambda2) {
  return (q.transpose() * s * q).trace() + lambda1 * l21_norm(q) +
         lambda2 * e.array().abs().sum();
}

RsldaModel fit_rslda(const LabeledDataset& data, const SolverConfig& cfg) {
  cfg.validate();
  if (cfg.lambda1 <= 0.0 || cfg.lambda2 <= 0.0)
    throw std::invalid_argument("lambda1 and lambda2 must be positive");

  const Eigen::MatrixXd& x = data.samples;
  const Eigen::Index d = data.dim();
  const double xnorm = x.norm();
  const ScatterSet sc = compute_scatter(data, cfg.balance);
  const Eigen::MatrixXd xxt = x * x.transpose();

  // ADMM working state. The slack variable e is soft-thresholded and the
  // iterates drift through infeasible territory; the returned model tracks
  // the incumbent instead: the best (q, p) seen so far, made exactly
  // feasible by letting e absorb the whole reconstruction residual.
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(d, d);
  Eigen::MatrixXd p = Eigen::MatrixXd::Identity(d, d);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(d, x.cols());
  Eigen::MatrixXd mult = Eigen::MatrixXd::Zero(d, x.cols());

  double mu = 0.1;
  const double rho = 1.1;
  const double mu_max = 1e6;

  RsldaModel model;
  double best = std::numeric_limits<double>::infinity();
  model.max_iter_reached = true;
  for (int it = 0; it < cfg.max_iter; ++it) {
    const RowWeightDiag dw = row_weight_matrix(q, cfg.epsilon);
    const Eigen::MatrixXd m = x - e + mult / mu;

    // Q: regularized symmetric system from the quadratic terms.
    Eigen::MatrixXd lhs = 2.0 * sc.s + mu * xxt;
    lhs.diagonal() += 2.0 * cfg.lambda1 * dw.weights;
    q = solve_sym(std::move(lhs), mu * x * m.transpose() * p);

    p = procrustes_orthogonal(m * x.transpose() * q).q;

    const Eigen::MatrixXd recon = p * q.transpose() * x;
    e = soft_threshold(x - recon + mult / mu, cfg.lambda2 / mu);

    // Incumbent update on the feasible completion of (q, p).
    const Eigen::MatrixXd e_full = x - recon;
    const double obj =
        rslda_objective(q, e_full, sc.s, cfg.lambda1, cfg.lambda2);
    if (obj < best) {
      best = obj;
      model.q = q;
      model.p = p;
      model.e = e_full;
    }
    model.history.push_back(best);

    const Eigen::MatrixXd gap = x - recon - e;
    mult += mu * gap;
    mu = std::min(rho * mu, mu_max);

    if (gap.norm() / (xnorm + 1e-300) < cfg.tol) {
      model.max_iter_reached = false;
      break;
    }
  }
  model.residual =
      (x - model.p * model.q.transpose() * x - model.e).norm() /
      (xnorm + 1e-300);
  return model;
}

} // namespace discrim
