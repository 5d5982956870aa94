#include "bnnbo/dataset.hpp"

#include <cmath>
#include <string>

namespace bnnbo {

Dataset Dataset::build(Eigen::MatrixXd inputs, const std::vector<double>& raw_targets,
                       std::vector<int> heads, int model_heads) {
  const auto n = raw_targets.size();
  if (static_cast<size_t>(inputs.cols()) != n || heads.size() != n) {
    throw ConfigError("dataset: inputs, targets and head tags must have equal length");
  }
  for (int h : heads) {
    if (h < 0 || h >= model_heads) {
      throw ConfigError("dataset: head index " + std::to_string(h) + " out of range for " +
                        std::to_string(model_heads) + "-head model");
    }
  }

  Dataset ds;
  ds.X = std::move(inputs);
  ds.head = std::move(heads);

  double mean = 0.0;
  for (double v : raw_targets) mean += v;
  if (n > 0) mean /= static_cast<double>(n);
  double var = 0.0;
  for (double v : raw_targets) var += (v - mean) * (v - mean);
  if (n > 0) var /= static_cast<double>(n);
  double std_dev = std::sqrt(var);
  if (std_dev < 1e-12) std_dev = 1.0;

  ds.y_mean = mean;
  ds.y_std = std_dev;
  ds.y.resize(static_cast<Eigen::Index>(n));
  for (size_t i = 0; i < n; ++i) {
    ds.y(static_cast<Eigen::Index>(i)) = (raw_targets[i] - mean) / std_dev;
  }
  return ds;
}

}  // namespace bnnbo
