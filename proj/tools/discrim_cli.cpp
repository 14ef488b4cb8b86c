#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "discrim/dataset.hpp"
#include "discrim/harness.hpp"
#include "discrim/ics_dlsr.hpp"
#include "discrim/lda.hpp"
#include "discrim/pca.hpp"
#include "discrim/rslda.hpp"
#include "discrim/sda_g.hpp"
#include "discrim/serialize.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using discrim::json;

std::int64_t default_seed() {
  if (const char* env = std::getenv("DISCRIM_EMBED_SEED"))
    return std::stoll(env);
  return 0;
}

json make_manifest(const std::string& subcommand,
                   const std::vector<std::string>& inputs,
                   const json& config,
                   const std::vector<std::string>& outputs,
                   std::int64_t seed) {
  return json{{"subcommand", subcommand}, {"inputs", inputs},
              {"config", config},         {"outputs", outputs},
              {"seed", seed},             {"tool_version", kToolVersion}};
}

// Grid flag syntax: either a comma list "0.1,1" or "lo:hi:Nlog" for N
// log-spaced values between lo and hi inclusive.
std::vector<double> parse_grid(const std::string& s) {
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    const auto a = s.find(':');
    const auto b = s.find(':', a + 1);
    if (b == std::string::npos) throw CLI::ValidationError("grid", "expected lo:hi:Nlog");
    std::string nspec = s.substr(b + 1);
    if (nspec.size() < 4 || nspec.substr(nspec.size() - 3) != "log")
      throw CLI::ValidationError("grid", "expected lo:hi:Nlog");
    const double lo = std::stod(s.substr(0, a));
    const double hi = std::stod(s.substr(a + 1, b - a - 1));
    const int n = std::stoi(nspec.substr(0, nspec.size() - 3));
    if (lo <= 0.0 || hi <= lo || n < 2)
      throw CLI::ValidationError("grid", "need 0 < lo < hi and N >= 2");
    for (int i = 0; i < n; ++i)
      out.push_back(std::exp(std::log(lo) +
                             (std::log(hi) - std::log(lo)) * i / (n - 1)));
    return out;
  }
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  if (out.empty()) throw CLI::ValidationError("grid", "empty grid");
  return out;
}

std::vector<Eigen::Index> parse_dims(const std::string& s) {
  std::vector<Eigen::Index> out;
  std::stringstream ss(s);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stoll(cell));
  return out;
}

struct ConfigFlags {
  std::optional<double> lambda1, lambda2, lambda3, balance, alpha, epsilon, tol;
  std::optional<int> max_iter;
  std::string config_path;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "JSON config file (flags override)");
    app->add_option("--lambda1", lambda1);
    app->add_option("--lambda2", lambda2);
    app->add_option("--lambda3", lambda3);
    app->add_option("--balance", balance);
    app->add_option("--alpha", alpha);
    app->add_option("--epsilon", epsilon);
    app->add_option("--tol", tol);
    app->add_option("--max-iter", max_iter);
  }

  discrim::SolverConfig resolve(std::int64_t seed) const {
    discrim::SolverConfig cfg;
    if (!config_path.empty())
      cfg = discrim::config_from_json(discrim::read_json(config_path));
    if (lambda1) cfg.lambda1 = *lambda1;
    if (lambda2) cfg.lambda2 = *lambda2;
    if (lambda3) cfg.lambda3 = *lambda3;
    if (balance) cfg.balance = *balance;
    if (alpha) cfg.alpha = *alpha;
    if (epsilon) cfg.epsilon = *epsilon;
    if (tol) cfg.tol = *tol;
    if (max_iter) cfg.max_iter = *max_iter;
    cfg.seed = seed;
    return cfg;
  }
};

void write_json_artifact(const std::string& path, json body,
                         const json& manifest) {
  body["manifest"] = manifest;
  discrim::write_text(path, body.dump(2) + "\n");
}

int cmd_gen_tetra(int n_per_class, Eigen::Index dim, std::int64_t seed,
                  const std::string& out_path) {
  const auto data = discrim::gen_tetra(n_per_class, dim, seed);
  const json manifest = make_manifest(
      "gen-tetra", {},
      json{{"n_per_class", n_per_class}, {"dim", dim}}, {out_path}, seed);
  std::ostringstream rows;
  rows << "# manifest: " << manifest.dump() << "\n";
  char buf[32];
  for (Eigen::Index j = 0; j < data.size(); ++j) {
    rows << data.labels[j];
    for (Eigen::Index k = 0; k < data.dim(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.samples(k, j));
      rows << ',' << buf;
    }
    rows << '\n';
  }
  discrim::write_text(out_path, rows.str());
  return 0;
}

int cmd_fit(const std::string& method, const ConfigFlags& flags,
            std::int64_t seed, const std::string& in_path,
            const std::string& out_path) {
  const auto data = discrim::load_csv(in_path);
  const auto cfg = flags.resolve(seed);
  const auto m = discrim::method_from_string(method);

  discrim::SavedModel saved;
  saved.method = method;
  saved.config = cfg;
  switch (m) {
    case discrim::Method::lda: {
      const auto model = discrim::fit_lda(data, cfg.balance, data.dim());
      saved.q = model.q;
      break;
    }
    case discrim::Method::rslda: {
      const auto model = discrim::fit_rslda(data, cfg);
      saved.q = model.q;
      saved.p = model.p;
      saved.history = model.history;
      break;
    }
    case discrim::Method::ics_dlsr: {
      const auto model = discrim::fit_ics_dlsr(data, cfg);
      saved.q = model.q;
      saved.history = model.history;
      break;
    }
    case discrim::Method::sda_g_1:
    case discrim::Method::sda_g_2: {
      const auto model = discrim::fit_sda_g(
          data, cfg,
          m == discrim::Method::sda_g_1 ? discrim::InitKind::rslda
                                        : discrim::InitKind::hybrid);
      saved.q = model.q;
      saved.p = model.p;
      saved.history = model.history;
      saved.init_kind = discrim::to_string(model.init_kind);
      break;
    }
    case discrim::Method::identity:
      throw CLI::ValidationError("--method",
                                 "identity has nothing to fit");
  }
  const json manifest = make_manifest("fit", {in_path},
                                      json{{"method", method},
                                           {"solver", discrim::config_to_json(cfg)}},
                                      {out_path}, seed);
  write_json_artifact(out_path, discrim::model_to_json(saved), manifest);
  return 0;
}

int cmd_transform(const std::string& model_path, const std::string& in_path,
                  const std::string& out_path, Eigen::Index dim) {
  const auto model = discrim::model_from_json(discrim::read_json(model_path));
  const auto data = discrim::load_csv(in_path);
  Eigen::MatrixXd z;
  if (model.method == "ics-dlsr") {
    if (model.q.cols() != data.dim())
      throw std::runtime_error("feature dimension mismatch");
    z = model.q * data.samples;
    if (dim > 0 && dim < z.rows()) z = z.topRows(dim).eval();
  } else {
    z = discrim::transform(model.q, data.samples, dim > 0 ? dim : -1);
  }
  std::ostringstream rows;
  const json manifest =
      make_manifest("transform", {model_path, in_path},
                    json{{"dim", dim}}, {out_path}, model.config.seed);
  rows << "# manifest: " << manifest.dump() << "\n";
  char buf[32];
  for (Eigen::Index j = 0; j < z.cols(); ++j) {
    rows << data.labels[j];
    for (Eigen::Index k = 0; k < z.rows(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", z(k, j));
      rows << ',' << buf;
    }
    rows << '\n';
  }
  discrim::write_text(out_path, rows.str());
  return 0;
}

discrim::MethodSpec make_spec(const std::string& method,
                              const ConfigFlags& flags, std::int64_t seed,
                              Eigen::Index dim) {
  discrim::MethodSpec spec;
  spec.method = discrim::method_from_string(method);
  spec.config = flags.resolve(seed);
  spec.dim = dim;
  return spec;
}

int cmd_evaluate(const std::string& method, const ConfigFlags& flags,
                 int train_per_class, int repeats, std::int64_t seed, int jobs,
                 Eigen::Index dim, const std::string& in_path,
                 const std::string& out_path, const std::string& csv_path) {
  const auto data = discrim::load_csv(in_path);
  const auto spec = make_spec(method, flags, seed, dim);
  const discrim::SplitPlan plan{train_per_class, repeats, seed};
  const auto report = discrim::run_protocol(data, spec, plan, in_path, jobs);

  const json manifest = make_manifest(
      "evaluate", {in_path},
      json{{"method", method},
           {"solver", discrim::config_to_json(spec.config)},
           {"train_per_class", train_per_class},
           {"repeats", repeats},
           {"jobs", jobs},
           {"dim", dim}},
      {out_path}, seed);
  write_json_artifact(out_path, discrim::report_to_json(report), manifest);
  if (!csv_path.empty())
    discrim::write_text(csv_path, discrim::reports_to_csv({report}));
  std::cout << report.method << " mean=" << report.mean
            << " std=" << report.stddev << "\n";
  return 0;
}

int cmd_sweep(const std::string& kind, const std::string& method,
              const ConfigFlags& flags, int train_per_class, int repeats,
              std::int64_t seed, int jobs, const std::string& dims_arg,
              const std::string& l1_arg, const std::string& l2_arg,
              const std::string& in_path, const std::string& out_path,
              const std::string& csv_path) {
  const auto data = discrim::load_csv(in_path);
  const auto spec = make_spec(method, flags, seed, -1);
  const discrim::SplitPlan plan{train_per_class, repeats, seed};

  json body;
  std::vector<discrim::EvalReport> flat;
  json config{{"method", method},
              {"solver", discrim::config_to_json(spec.config)},
              {"train_per_class", train_per_class},
              {"repeats", repeats},
              {"jobs", jobs},
              {"sweep", kind}};
  if (kind == "dim") {
    const auto dims = parse_dims(dims_arg);
    if (dims.empty()) throw CLI::ValidationError("--dims", "empty dim list");
    const auto res = discrim::sweep_dimension(data, spec, plan, dims, in_path, jobs);
    body["warnings"] = res.warnings;
    json reports = json::array();
    for (const auto& r : res.reports) {
      reports.push_back(discrim::report_to_json(r));
      flat.push_back(r);
    }
    body["reports"] = reports;
    config["dims"] = dims_arg;
  } else if (kind == "params") {
    const auto g1 = parse_grid(l1_arg);
    const auto g2 = parse_grid(l2_arg);
    const auto res = discrim::sweep_params(data, spec, plan, g1, g2, in_path, jobs);
    body["lambda1_grid"] = res.lambda1_grid;
    body["lambda2_grid"] = res.lambda2_grid;
    json cells = json::array();
    for (const auto& r : res.cells) {
      cells.push_back(discrim::report_to_json(r));
      flat.push_back(r);
    }
    body["cells"] = cells;
    config["lambda1_grid"] = l1_arg;
    config["lambda2_grid"] = l2_arg;
  } else {
    throw CLI::ValidationError("--sweep", "expected dim or params");
  }
  const json manifest = make_manifest("sweep", {in_path}, config, {out_path}, seed);
  write_json_artifact(out_path, std::move(body), manifest);
  if (!csv_path.empty())
    discrim::write_text(csv_path, discrim::reports_to_csv(flat));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supervised discriminant embedding toolkit"};
  app.require_subcommand(1);

  std::int64_t seed = default_seed();
  std::string in_path, out_path, csv_path, method = "lda";
  int jobs = 1;

  // gen-tetra
  auto* gen = app.add_subcommand("gen-tetra", "Generate the synthetic four-ball dataset");
  int n_per_class = 100;
  Eigen::Index dim = 100;
  gen->add_option("--n-per-class", n_per_class);
  gen->add_option("--dim", dim);
  gen->add_option("--seed", seed);
  gen->add_option("-o,--output", out_path)->required();

  // fit
  auto* fit = app.add_subcommand("fit", "Fit an embedding on a labeled CSV");
  ConfigFlags fit_flags;
  fit->add_option("--method", method)->required();
  fit_flags.attach(fit);
  fit->add_option("--seed", seed);
  fit->add_option("-i,--input", in_path)->required();
  fit->add_option("-o,--output", out_path)->required();

  // transform
  auto* tr = app.add_subcommand("transform", "Project a CSV through a fitted model");
  std::string model_path;
  Eigen::Index tr_dim = -1;
  tr->add_option("--model", model_path)->required();
  tr->add_option("--dim", tr_dim);
  tr->add_option("-i,--input", in_path)->required();
  tr->add_option("-o,--output", out_path)->required();

  // evaluate
  auto* ev = app.add_subcommand("evaluate", "Repeated-split NN evaluation");
  ConfigFlags ev_flags;
  int train_per_class = 10, repeats = 10;
  Eigen::Index ev_dim = -1;
  ev->add_option("--method", method)->required();
  ev_flags.attach(ev);
  ev->add_option("--train-per-class", train_per_class)->required();
  ev->add_option("--repeats", repeats);
  ev->add_option("--seed", seed);
  ev->add_option("--jobs", jobs);
  ev->add_option("--dim", ev_dim);
  ev->add_option("-i,--input", in_path)->required();
  ev->add_option("-o,--output", out_path);
  ev->add_option("--csv", csv_path);

  // sweep
  auto* sw = app.add_subcommand("sweep", "Dimension or parameter-grid sweep");
  ConfigFlags sw_flags;
  std::string sweep_kind, dims_arg, l1_arg = "1e-5:1:7log", l2_arg = "1e-3:10:5log";
  sw->add_option("--sweep", sweep_kind)->required();
  sw->add_option("--method", method)->required();
  sw_flags.attach(sw);
  sw->add_option("--train-per-class", train_per_class)->required();
  sw->add_option("--repeats", repeats);
  sw->add_option("--seed", seed);
  sw->add_option("--jobs", jobs);
  sw->add_option("--dims", dims_arg);
  sw->add_option("--lambda1-grid", l1_arg);
  sw->add_option("--lambda2-grid", l2_arg);
  sw->add_option("-i,--input", in_path)->required();
  sw->add_option("-o,--output", out_path)->required();
  sw->add_option("--csv", csv_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen_tetra(n_per_class, dim, seed, out_path);
    if (fit->parsed()) return cmd_fit(method, fit_flags, seed, in_path, out_path);
    if (tr->parsed()) return cmd_transform(model_path, in_path, out_path, tr_dim);
    if (ev->parsed()) {
      if (out_path.empty()) out_path = "report.json";
      return cmd_evaluate(method, ev_flags, train_per_class, repeats, seed,
                          jobs, ev_dim, in_path, out_path, csv_path);
    }
    if (sw->parsed())
      return cmd_sweep(sweep_kind, method, sw_flags, train_per_class, repeats,
                       seed, jobs, dims_arg, l1_arg, l2_arg, in_path, out_path,
                       csv_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
