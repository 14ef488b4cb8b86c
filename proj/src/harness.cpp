#include "discrim/harness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "discrim/ics_dlsr.hpp"
#include "discrim/lda.hpp"
#include "discrim/pca.hpp"
#include "discrim/rslda.hpp"
#include "discrim/sda_g.hpp"

namespace discrim {

std::string to_string(Method m) {
  switch (m) {
    case Method::identity: return "identity";
    case Method::lda: return "lda";
    case Method::rslda: return "rslda";
    case Method::ics_dlsr: return "ics-dlsr";
    case Method::sda_g_1: return "sda-g-1";
    case Method::sda_g_2: return "sda-g-2";
  }
  throw std::logic_error("unreachable");
}

Method method_from_string(const std::string& s) {
  if (s == "identity") return Method::identity;
  if (s == "lda") return Method::lda;
  if (s == "rslda") return Method::rslda;
  if (s == "ics-dlsr") return Method::ics_dlsr;
  if (s == "sda-g-1") return Method::sda_g_1;
  if (s == "sda-g-2") return Method::sda_g_2;
  throw std::invalid_argument("unknown method: " + s);
}

LabeledDataset gen_tetra(int n_per_class, Eigen::Index target_dim,
                         std::int64_t seed) {
  if (n_per_class < 1) throw std::invalid_argument("n_per_class must be >= 1");
  if (target_dim < 3) throw std::invalid_argument("target_dim must be >= 3");

  // Regular tetrahedron on alternated cube corners, scaled so the edge is
  // 2.1 radii: balls of radius 1 nearly touch.
  const double scale = 2.1 / (2.0 * std::sqrt(2.0));
  Eigen::Matrix<double, 3, 4> centers;
  centers.col(0) << 1, 1, 1;
  centers.col(1) << 1, -1, -1;
  centers.col(2) << -1, 1, -1;
  centers.col(3) << -1, -1, 1;
  centers *= scale;

  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  const Eigen::Index n = 4 * static_cast<Eigen::Index>(n_per_class);
  Eigen::MatrixXd pts(3, n);
  Eigen::VectorXi labels(n);
  Eigen::Index col = 0;
  for (int c = 0; c < 4; ++c) {
    for (int k = 0; k < n_per_class; ++k, ++col) {
      Eigen::Vector3d dir(gauss(rng), gauss(rng), gauss(rng));
      dir.normalize();
      const double r = std::cbrt(unif(rng));  // uniform in the unit ball
      pts.col(col) = centers.col(c) + r * dir;
      labels[col] = c;
    }
  }

  Eigen::MatrixXd lift(target_dim, 3);
  for (Eigen::Index i = 0; i < target_dim; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) lift(i, j) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(lift);
  const Eigen::MatrixXd ortho =
      qr.householderQ() * Eigen::MatrixXd::Identity(target_dim, 3);

  return make_dataset(ortho * pts, std::move(labels));
}

Eigen::VectorXi nn_classify(const Eigen::MatrixXd& train_embed,
                            const Eigen::VectorXi& train_labels,
                            const Eigen::MatrixXd& test_embed) {
  if (train_embed.cols() == 0) throw std::invalid_argument("empty training set");
  if (train_embed.rows() != test_embed.rows())
    throw std::invalid_argument("embedding dimension mismatch");
  Eigen::VectorXi pred(test_embed.cols());
  for (Eigen::Index j = 0; j < test_embed.cols(); ++j) {
    Eigen::Index best = 0;
    double best_d2 = (train_embed.col(0) - test_embed.col(j)).squaredNorm();
    for (Eigen::Index i = 1; i < train_embed.cols(); ++i) {
      const double d2 = (train_embed.col(i) - test_embed.col(j)).squaredNorm();
      if (d2 < best_d2) {  // strict: ties keep the lowest index
        best_d2 = d2;
        best = i;
      }
    }
    pred[j] = train_labels[best];
  }
  return pred;
}

StratifiedSplit stratified_split(const LabeledDataset& data,
                                 int train_per_class, std::int64_t seed) {
  std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
  std::vector<Eigen::Index> train_idx, test_idx;
  for (int c = 0; c < data.num_classes(); ++c) {
    auto idx = data.class_indices(c);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t k = 0; k < idx.size(); ++k)
      (k < static_cast<std::size_t>(train_per_class) ? train_idx : test_idx)
          .push_back(idx[k]);
  }
  std::sort(train_idx.begin(), train_idx.end());
  std::sort(test_idx.begin(), test_idx.end());

  const auto gather = [&](const std::vector<Eigen::Index>& idx,
                          Eigen::MatrixXd& x, Eigen::VectorXi& y) {
    x.resize(data.dim(), static_cast<Eigen::Index>(idx.size()));
    y.resize(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t k = 0; k < idx.size(); ++k) {
      x.col(static_cast<Eigen::Index>(k)) = data.samples.col(idx[k]);
      y[static_cast<Eigen::Index>(k)] = data.labels[idx[k]];
    }
  };
  StratifiedSplit s;
  Eigen::MatrixXd train_x;
  Eigen::VectorXi train_y;
  gather(train_idx, train_x, train_y);
  gather(test_idx, s.test_x, s.test_y);
  s.train = make_dataset(std::move(train_x), std::move(train_y),
                         data.num_classes());
  return s;
}

namespace {

// Fits the requested embedder on the (post-PCA) training set and returns the
// projection applied to both sets. dim caps at what the model provides.
void embed(const MethodSpec& spec, const LabeledDataset& train,
           const Eigen::MatrixXd& test_x, Eigen::MatrixXd& train_embed,
           Eigen::MatrixXd& test_embed) {
  const Eigen::Index d = train.dim();
  switch (spec.method) {
    case Method::identity: {
      train_embed = train.samples;
      test_embed = test_x;
      return;
    }
    case Method::lda: {
      const Eigen::Index m =
          spec.dim > 0 ? std::min<Eigen::Index>(spec.dim, d) : d;
      const LdaModel model = fit_lda(train, spec.config.balance, m);
      train_embed = model.q.transpose() * train.samples;
      test_embed = model.q.transpose() * test_x;
      return;
    }
    case Method::rslda: {
      const RsldaModel model = fit_rslda(train, spec.config);
      const Eigen::Index m =
          spec.dim > 0 ? std::min<Eigen::Index>(spec.dim, d) : d;
      train_embed = transform(model.q, train.samples, m);
      test_embed = transform(model.q, test_x, m);
      return;
    }
    case Method::ics_dlsr: {
      const IcsDlsrModel model = fit_ics_dlsr(train, spec.config);
      train_embed = model.q * train.samples;
      test_embed = model.q * test_x;
      if (spec.dim > 0 && spec.dim < train_embed.rows()) {
        train_embed = train_embed.topRows(spec.dim).eval();
        test_embed = test_embed.topRows(spec.dim).eval();
      }
      return;
    }
    case Method::sda_g_1:
    case Method::sda_g_2: {
      const SdaGModel model = fit_sda_g(
          train, spec.config,
          spec.method == Method::sda_g_1 ? InitKind::rslda : InitKind::hybrid);
      const Eigen::Index m =
          spec.dim > 0 ? std::min<Eigen::Index>(spec.dim, d) : d;
      train_embed = transform(model, train.samples, m);
      test_embed = transform(model, test_x, m);
      return;
    }
  }
  throw std::logic_error("unreachable");
}

double run_one_split(const LabeledDataset& data, const MethodSpec& spec,
                     int train_per_class, std::int64_t seed) {
  StratifiedSplit s = stratified_split(data, train_per_class, seed);
  auto [basis, train_proj] = pca_preprocess(s.train);
  const Eigen::MatrixXd test_proj = basis.project(s.test_x);

  Eigen::MatrixXd train_embed, test_embed;
  embed(spec, train_proj, test_proj, train_embed, test_embed);

  const Eigen::VectorXi pred =
      nn_classify(train_embed, train_proj.labels, test_embed);
  Eigen::Index correct = 0;
  for (Eigen::Index j = 0; j < pred.size(); ++j)
    if (pred[j] == s.test_y[j]) ++correct;
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(std::max<Eigen::Index>(pred.size(), 1));
}

} // namespace

EvalReport run_protocol(const LabeledDataset& data, const MethodSpec& spec,
                        const SplitPlan& plan, const std::string& dataset_name,
                        int jobs) {
  if (plan.train_per_class < 1 || plan.n_repeats < 1)
    throw std::invalid_argument("invalid split plan");
  if (plan.train_per_class >= data.class_counts.minCoeff())
    throw std::invalid_argument(
        "train_per_class must be below the smallest class count");

  EvalReport report;
  report.method = to_string(spec.method);
  report.dataset = dataset_name;
  report.plan = plan;
  report.dim = spec.dim;
  report.lambda1 = spec.config.lambda1;
  report.lambda2 = spec.config.lambda2;
  report.per_split.assign(static_cast<std::size_t>(plan.n_repeats), 0.0);

  const auto worker = [&](int begin, int stride) {
    for (int r = begin; r < plan.n_repeats; r += stride)
      report.per_split[static_cast<std::size_t>(r)] =
          run_one_split(data, spec, plan.train_per_class, plan.base_seed + r);
  };
  const int nthreads = std::max(1, std::min(jobs, plan.n_repeats));
  if (nthreads == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker, t, nthreads);
    for (auto& th : pool) th.join();
  }

  const double n = static_cast<double>(plan.n_repeats);
  report.mean =
      std::accumulate(report.per_split.begin(), report.per_split.end(), 0.0) / n;
  if (plan.n_repeats > 1) {
    double ss = 0.0;
    for (double a : report.per_split) ss += (a - report.mean) * (a - report.mean);
    report.stddev = std::sqrt(ss / (n - 1.0));
  }
  return report;
}

DimSweepResult sweep_dimension(const LabeledDataset& data,
                               const MethodSpec& spec, const SplitPlan& plan,
                               std::vector<Eigen::Index> dims,
                               const std::string& dataset_name, int jobs) {
  std::sort(dims.begin(), dims.end());
  // Full-data numerical rank bounds what any train-split PCA can retain.
  const Eigen::Index max_dim = pca_preprocess(data).first.rank;
  DimSweepResult out;
  for (Eigen::Index dim : dims) {
    if (dim < 1 || dim > max_dim) {
      out.warnings.push_back("dim " + std::to_string(dim) +
                             " exceeds data rank " + std::to_string(max_dim) +
                             "; skipped");
      continue;
    }
    MethodSpec cell = spec;
    cell.dim = dim;
    out.reports.push_back(run_protocol(data, cell, plan, dataset_name, jobs));
  }
  return out;
}

ParamSweepResult sweep_params(const LabeledDataset& data,
                              const MethodSpec& spec, const SplitPlan& plan,
                              const std::vector<double>& lambda1_grid,
                              const std::vector<double>& lambda2_grid,
                              const std::string& dataset_name, int jobs) {
  if (lambda1_grid.empty() || lambda2_grid.empty())
    throw std::invalid_argument("empty parameter grid");
  ParamSweepResult out;
  out.lambda1_grid = lambda1_grid;
  out.lambda2_grid = lambda2_grid;
  for (double l1 : lambda1_grid) {
    for (double l2 : lambda2_grid) {
      MethodSpec cell = spec;
      cell.config.lambda1 = l1;
      cell.config.lambda2 = l2;
      out.cells.push_back(run_protocol(data, cell, plan, dataset_name, jobs));
    }
  }
  return out;
}

} // namespace discrim
