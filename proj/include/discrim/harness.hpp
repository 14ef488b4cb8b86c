#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "discrim/dataset.hpp"
#include "discrim/solver_config.hpp"

namespace discrim {

struct SplitPlan {
  int train_per_class = 0;
  int n_repeats = 10;
  std::int64_t base_seed = 0;
};

struct EvalReport {
  std::string method;
  std::string dataset;
  SplitPlan plan;
  std::vector<double> per_split;  // accuracy percent per repeat
  double mean = 0.0;
  double stddev = 0.0;
  Eigen::Index dim = -1;          // embedding dimension, -1 = full
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

enum class Method { identity, lda, rslda, ics_dlsr, sda_g_1, sda_g_2 };

std::string to_string(Method m);
Method method_from_string(const std::string& s);

/// Which embedder to run, with its hyperparameters and an optional cap on
/// the embedding dimension (first-m-columns transform).
struct MethodSpec {
  Method method = Method::lda;
  SolverConfig config;
  Eigen::Index dim = -1;  // -1 = full dimension
};

/// Four solid unit balls centered on a regular tetrahedron with edge
/// 2.1 * radius, lifted to target_dim by a seeded random projection with
/// orthonormalized columns.
LabeledDataset gen_tetra(int n_per_class, Eigen::Index target_dim,
                         std::int64_t seed);

/// 1-NN under Euclidean distance; exact ties go to the lowest train index.
Eigen::VectorXi nn_classify(const Eigen::MatrixXd& train_embed,
                            const Eigen::VectorXi& train_labels,
                            const Eigen::MatrixXd& test_embed);

/// Seeded stratified split: train_per_class samples per class drawn by a
/// per-class shuffle, the rest held out. Column order is preserved within
/// each side.
struct StratifiedSplit {
  LabeledDataset train;
  Eigen::MatrixXd test_x;
  Eigen::VectorXi test_y;
};

StratifiedSplit stratified_split(const LabeledDataset& data,
                                 int train_per_class, std::int64_t seed);

/// Seeded stratified split -> train-only PCA -> fit -> transform -> 1-NN,
/// repeated plan.n_repeats times. jobs > 1 runs repeats on worker threads;
/// each repeat is a pure function of (data, spec, seed), so results are
/// identical to the serial run.
EvalReport run_protocol(const LabeledDataset& data, const MethodSpec& spec,
                        const SplitPlan& plan,
                        const std::string& dataset_name = "dataset",
                        int jobs = 1);

struct DimSweepResult {
  std::vector<EvalReport> reports;        // keyed by dim, ascending
  std::vector<std::string> warnings;      // skipped dims
};

DimSweepResult sweep_dimension(const LabeledDataset& data,
                               const MethodSpec& spec, const SplitPlan& plan,
                               std::vector<Eigen::Index> dims,
                               const std::string& dataset_name = "dataset",
                               int jobs = 1);

struct ParamSweepResult {
  std::vector<double> lambda1_grid;
  std::vector<double> lambda2_grid;
  std::vector<EvalReport> cells;  // row-major over (lambda1, lambda2)
};

ParamSweepResult sweep_params(const LabeledDataset& data,
                              const MethodSpec& spec, const SplitPlan& plan,
                              const std::vector<double>& lambda1_grid,
                              const std::vector<double>& lambda2_grid,
                              const std::string& dataset_name = "dataset",
                              int jobs = 1);

} // namespace discrim
