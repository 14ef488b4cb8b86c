#pragma once

#include <cstdint>
#include <stdexcept>

namespace discrim {

/// Shared hyperparameter bundle for the embedding solvers.
struct SolverConfig {
  double lambda1 = 0.1;   // row-sparsity weight
  double lambda2 = 0.1;   // reconstruction / slack weight
  double lambda3 = 0.1;   // ICS_DLSR slack weight only
  double balance = 0.1;   // scatter balance in S = S_w - balance * S_b
  double alpha = 1e-5;    // gradient step length
  double epsilon = 1e-6;  // reweighting regularizer
  int max_iter = 200;
  double tol = 1e-6;      // relative change / feasibility tolerance
  std::int64_t seed = 0;

  void validate() const {
    if (balance <= 0.0) throw std::invalid_argument("balance must be positive");
    if (alpha < 0.0 || alpha > 1e-3)
      throw std::invalid_argument("alpha must lie in [0, 1e-3]");
    if (epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
    if (max_iter < 1) throw std::invalid_argument("max_iter must be positive");
    if (tol <= 0.0 || tol >= 1.0) throw std::invalid_argument("tol must be in (0,1)");
    if (lambda1 < 0.0 || lambda2 < 0.0 || lambda3 < 0.0)
      throw std::invalid_argument("negative regularization weight");
  }
};

} // namespace discrim
