#pragma once

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "discrim/harness.hpp"
#include "discrim/solver_config.hpp"

namespace discrim {

using json = nlohmann::ordered_json;

json matrix_to_json(const Eigen::MatrixXd& m);  // row-major nested arrays
Eigen::MatrixXd matrix_from_json(const json& j);

json config_to_json(const SolverConfig& cfg);
SolverConfig config_from_json(const json& j);

/// Fitted projection in the repo-wide model format.
struct SavedModel {
  std::string method;
  Eigen::MatrixXd q;
  std::optional<Eigen::MatrixXd> p;
  std::vector<double> history;
  SolverConfig config;
  std::string init_kind;  // empty unless sda-g
};

json model_to_json(const SavedModel& model);
SavedModel model_from_json(const json& j);

json report_to_json(const EvalReport& report);
/// Flat CSV: one row per split (method,dataset,dim,lambda1,lambda2,split,accuracy).
std::string reports_to_csv(const std::vector<EvalReport>& reports);

void write_text(const std::string& path, const std::string& text);
json read_json(const std::string& path);

} // namespace discrim
