#pragma once

#include <Eigen/Core>
#include <vector>

#include "bnnbo/common.hpp"

namespace bnnbo {

/// Regression data for one metric model. Targets are stored standardized;
/// the raw-target mean/std are kept for de-standardizing predictions.
/// `head[n]` selects which output head row n trains (always 0 when the
/// model has one head; fidelity-1 rows train head 0, fidelity-2 head 1).
struct Dataset {
  Eigen::MatrixXd X;        // input_dim x N, normalized coordinates
  Eigen::VectorXd y;        // standardized targets
  std::vector<int> head;    // 0-based head index per row
  double y_mean = 0.0;
  double y_std = 1.0;

  int rows() const { return static_cast<int>(X.cols()); }
  int input_dim() const { return static_cast<int>(X.rows()); }

  /// Build from raw targets: standardizes to zero mean / unit variance.
  /// Degenerate data (raw std < 1e-12) keeps std = 1 so constant targets
  /// stay finite.
  static Dataset build(Eigen::MatrixXd inputs, const std::vector<double>& raw_targets,
                       std::vector<int> heads, int model_heads);
};

}  // namespace bnnbo
