#include "discrim/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace discrim {

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Eigen::MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw std::runtime_error("expected nested array matrix");
  const Eigen::Index r = static_cast<Eigen::Index>(j.size());
  const Eigen::Index c = static_cast<Eigen::Index>(j[0].size());
  Eigen::MatrixXd m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(j[i].size()) != c)
      throw std::runtime_error("ragged matrix rows");
    for (Eigen::Index k = 0; k < c; ++k)
      m(i, k) = j[i][k].get<double>();
  }
  return m;
}

json config_to_json(const SolverConfig& cfg) {
  return json{{"lambda1", cfg.lambda1}, {"lambda2", cfg.lambda2},
              {"lambda3", cfg.lambda3}, {"balance", cfg.balance},
              {"alpha", cfg.alpha},     {"epsilon", cfg.epsilon},
              {"max_iter", cfg.max_iter}, {"tol", cfg.tol},
              {"seed", cfg.seed}};
}

SolverConfig config_from_json(const json& j) {
  SolverConfig cfg;
  cfg.lambda1 = j.value("lambda1", cfg.lambda1);
  cfg.lambda2 = j.value("lambda2", cfg.lambda2);
  cfg.lambda3 = j.value("lambda3", cfg.lambda3);
  cfg.balance = j.value("balance", cfg.balance);
  cfg.alpha = j.value("alpha", cfg.alpha);
  cfg.epsilon = j.value("epsilon", cfg.epsilon);
  cfg.max_iter = j.value("max_iter", cfg.max_iter);
  cfg.tol = j.value("tol", cfg.tol);
  cfg.seed = j.value("seed", cfg.seed);
  return cfg;
}

json model_to_json(const SavedModel& model) {
  json j;
  j["method"] = model.method;
  if (!model.init_kind.empty()) j["init_kind"] = model.init_kind;
  j["config"] = config_to_json(model.config);
  j["q"] = matrix_to_json(model.q);
  if (model.p) j["p"] = matrix_to_json(*model.p);
  j["history"] = model.history;
  return j;
}

SavedModel model_from_json(const json& j) {
  SavedModel model;
  model.method = j.at("method").get<std::string>();
  model.init_kind = j.value("init_kind", std::string{});
  model.config = config_from_json(j.at("config"));
  model.q = matrix_from_json(j.at("q"));
  if (j.contains("p")) model.p = matrix_from_json(j.at("p"));
  model.history = j.value("history", std::vector<double>{});
  return model;
}

json report_to_json(const EvalReport& report) {
  json j;
  j["method"] = report.method;
  j["dataset"] = report.dataset;
  j["plan"] = {{"train_per_class", report.plan.train_per_class},
               {"n_repeats", report.plan.n_repeats},
               {"base_seed", report.plan.base_seed}};
  if (report.dim > 0) j["dim"] = report.dim;
  j["lambda1"] = report.lambda1;
  j["lambda2"] = report.lambda2;
  j["per_split"] = report.per_split;
  j["mean"] = report.mean;
  j["std"] = report.stddev;
  return j;
}

std::string reports_to_csv(const std::vector<EvalReport>& reports) {
  std::ostringstream out;
  out << "method,dataset,dim,lambda1,lambda2,split,accuracy\n";
  out.precision(17);
  for (const auto& r : reports)
    for (std::size_t s = 0; s < r.per_split.size(); ++s)
      out << r.method << ',' << r.dataset << ',' << r.dim << ',' << r.lambda1
          << ',' << r.lambda2 << ',' << s << ',' << r.per_split[s] << '\n';
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

} // namespace discrim
