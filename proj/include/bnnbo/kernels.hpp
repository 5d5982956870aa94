#pragma once

#include <Eigen/Core>
#include <array>
#include <vector>

#include "bnnbo/dataset.hpp"
#include "bnnbo/mlp.hpp"

namespace bnnbo {

/// Gamma prior on the noise precision tau.
struct GammaPrior {
  double a0 = 1.0;
  double b0 = 1.0;
};

/// Batched forward pass: X is input_dim x B, result is heads x B.
/// Single-threaded; callers parallelize across independent calls.
Eigen::MatrixXd forward_batch(const BnnArchitecture& arch, const Eigen::VectorXd& theta,
                              const Eigen::MatrixXd& X);

/// Log joint density of (theta, log_tau) given the dataset:
/// standard-normal prior over theta, Gamma prior over tau (with the
/// log-parameterization Jacobian), and per-row Gaussian likelihoods where
/// each row contributes only through its own head.
double log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                 const GammaPrior& prior);

/// Exact reverse-mode gradient of log_joint over (theta, log_tau).
/// Returns the log_joint value. Row contributions are accumulated in
/// fixed-size blocks combined in block order, so results are bit-identical
/// for any OpenMP thread count.
double grad_log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                      const GammaPrior& prior, Eigen::VectorXd& grad_theta, double& grad_log_tau);

/// Sum of squared residuals under the current parameters (for the
/// conjugate Gibbs update of tau).
double residual_sum_squares(const BnnArchitecture& arch, const BnnParams& params,
                            const Dataset& data);

/// Likelihood subtotal per head, each accumulated over that head's rows
/// only. Reordering the rows of one head never changes the other head's
/// subtotal bit.
std::array<double, 2> log_likelihood_by_head(const BnnArchitecture& arch, const BnnParams& params,
                                             const Dataset& data);

// Plain-loop serial implementations, kept independent of the Eigen/OpenMP
// path above. Tests check the two paths against each other and the bench
// target compares their throughput.
namespace reference {

std::vector<double> forward_one(const BnnArchitecture& arch, const std::vector<double>& theta,
                                const std::vector<double>& x);

double log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                 const GammaPrior& prior);

}  // namespace reference

}  // namespace bnnbo
