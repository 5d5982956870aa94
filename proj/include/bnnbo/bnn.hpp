#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "bnnbo/dataset.hpp"
#include "bnnbo/hmc.hpp"
#include "bnnbo/kernels.hpp"
#include "bnnbo/mlp.hpp"

namespace bnnbo {

/// Retained posterior over one metric model: M parameter samples drawn by
/// HMC plus the target standardization that maps predictions back to raw
/// units. Immutable once fitted.
struct BnnPosterior {
  BnnArchitecture arch;
  std::vector<BnnParams> samples;
  double y_mean = 0.0;
  double y_std = 1.0;

  int sample_count() const { return static_cast<int>(samples.size()); }
};

struct Prediction {
  double mean = 0.0;
  double variance = 0.0;
};

struct FitOptions {
  HmcConfig hmc;
  GammaPrior prior;
  /// Chain start: previous posterior's last sample when shapes match,
  /// otherwise fresh N(0, 0.1^2) draws.
  std::optional<Eigen::VectorXd> warm_theta;
  /// Carry the adapted step size across refits.
  std::optional<double> initial_step_size;
};

struct FitOutcome {
  BnnPosterior posterior;
  HmcDiagnostics diagnostics;
};

/// Trains one BNN by HMC over theta with a conjugate Gibbs update of tau
/// interleaved every iteration:
///   tau | theta, D ~ Gamma(a0 + N/2, b0 + rss/2).
/// Deterministic given (data, options). Throws DivergenceError when the
/// burn-in phase diverges.
FitOutcome fit(const BnnArchitecture& arch, const Dataset& data, const FitOptions& options);

/// Posterior predictive moments at x for the given head, in raw target
/// units: epistemic spread of the head outputs plus the mean aleatoric
/// variance 1/tau.
Prediction predict(const BnnPosterior& posterior, const Eigen::VectorXd& x, int head);

/// Head outputs of posterior sample i over a batch of inputs,
/// de-standardized, without observation noise. Fixing i across many x
/// yields one coherent function draw (Thompson sampling).
Eigen::MatrixXd realize_batch(const BnnPosterior& posterior, int sample_index,
                              const Eigen::MatrixXd& X);

/// Single-point realization phi(x; theta_i)[head] (+ noise ~ N(0, 1/tau_i)
/// when with_noise), de-standardized.
double sample_realization(const BnnPosterior& posterior, const Eigen::VectorXd& x, int head,
                          int sample_index, RandomStream& rng, bool with_noise = true);

}  // namespace bnnbo
