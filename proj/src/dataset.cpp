#include "discrim/dataset.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace discrim {

Eigen::MatrixXd LabeledDataset::class_matrix(int i) const {
  const auto idx = class_indices(i);
  Eigen::MatrixXd xi(samples.rows(), static_cast<Eigen::Index>(idx.size()));
  for (Eigen::Index k = 0; k < xi.cols(); ++k)
    xi.col(k) = samples.col(idx[static_cast<std::size_t>(k)]);
  return xi;
}

std::vector<Eigen::Index> LabeledDataset::class_indices(int i) const {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index j = 0; j < labels.size(); ++j)
    if (labels[j] == i) idx.push_back(j);
  return idx;
}

LabeledDataset make_dataset(Eigen::MatrixXd samples, Eigen::VectorXi labels,
                            int num_classes) {
  if (samples.cols() != labels.size())
    throw std::invalid_argument("label count does not match sample count");
  if (labels.size() == 0) throw std::invalid_argument("empty dataset");
  int c = num_classes;
  if (c < 0) c = labels.maxCoeff() + 1;
  if (labels.minCoeff() < 0 || labels.maxCoeff() >= c)
    throw std::invalid_argument("label out of range");
  Eigen::VectorXi counts = Eigen::VectorXi::Zero(c);
  for (Eigen::Index j = 0; j < labels.size(); ++j) counts[labels[j]]++;
  for (int i = 0; i < c; ++i)
    if (counts[i] == 0) throw std::invalid_argument("empty class");
  return LabeledDataset{std::move(samples), std::move(labels),
                        std::move(counts)};
}

LabeledDataset load_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::vector<double>> rows;
  std::vector<int> labels;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<double> vals;
    while (std::getline(ss, cell, ',')) {
      try {
        vals.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw std::runtime_error(path + ": parse error at row " +
                                 std::to_string(lineno));
      }
    }
    if (vals.size() < 2)
      throw std::runtime_error(path + ": parse error at row " +
                               std::to_string(lineno) + " (need label + features)");
    labels.push_back(static_cast<int>(vals[0]));
    rows.emplace_back(vals.begin() + 1, vals.end());
    if (rows.back().size() != rows.front().size())
      throw std::runtime_error(path + ": inconsistent width at row " +
                               std::to_string(lineno));
  }
  if (rows.empty()) throw std::runtime_error(path + ": no samples");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index d = static_cast<Eigen::Index>(rows.front().size());
  Eigen::MatrixXd x(d, n);
  Eigen::VectorXi y(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    y[j] = labels[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < d; ++k)
      x(k, j) = rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  return make_dataset(std::move(x), std::move(y));
}

void save_csv(const LabeledDataset& data, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  char buf[32];
  for (Eigen::Index j = 0; j < data.size(); ++j) {
    out << data.labels[j];
    for (Eigen::Index k = 0; k < data.dim(); ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", data.samples(k, j));
      out << ',' << buf;
    }
    out << '\n';
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace discrim
