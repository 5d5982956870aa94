#include "bnnbo/bnn.hpp"

#include <cmath>
#include <string>

namespace bnnbo {

FitOutcome fit(const BnnArchitecture& arch, const Dataset& data, const FitOptions& options) {
  arch.validate();
  options.hmc.validate();
  if (data.rows() < 1) throw ConfigError("fit: dataset must be non-empty");
  if (data.input_dim() != arch.input_dim) throw ConfigError("fit: dataset/architecture dim mismatch");

  const int p = arch.param_count();
  const double n = static_cast<double>(data.rows());
  RandomStream rng(options.hmc.seed);

  Eigen::VectorXd theta0(p);
  if (options.warm_theta && options.warm_theta->size() == p) {
    theta0 = *options.warm_theta;
  } else {
    for (int i = 0; i < p; ++i) theta0(i) = 0.1 * rng.normal();
  }

  BnnParams current;
  current.theta = theta0;
  current.log_tau = 0.0;

  // HMC moves theta only; tau enters the target as a fixed parameter that
  // the Gibbs step rewrites between trajectories.
  double log_tau = 0.0;
  LogProbGradFn target = [&](const Eigen::VectorXd& q, Eigen::VectorXd& grad) {
    BnnParams candidate;
    candidate.theta = q;
    candidate.log_tau = log_tau;
    double grad_log_tau_unused = 0.0;
    return grad_log_joint(arch, candidate, data, options.prior, grad, grad_log_tau_unused);
  };

  const double eps0 = options.initial_step_size.value_or(options.hmc.step_size);
  HmcChain chain(target, theta0, eps0, options.hmc.leapfrog_steps);

  BnnPosterior posterior;
  posterior.arch = arch;
  posterior.y_mean = data.y_mean;
  posterior.y_std = data.y_std;
  posterior.samples.reserve(static_cast<size_t>(options.hmc.retained));

  const int total = options.hmc.burn_in + options.hmc.retained;
  int accepted_retained = 0;
  for (int iter = 0; iter < total; ++iter) {
    // Gibbs: tau | theta, D.
    BnnParams at;
    at.theta = chain.position();
    at.log_tau = log_tau;
    const double rss = residual_sum_squares(arch, at, data);
    const double tau = rng.gamma(options.prior.a0 + 0.5 * n, options.prior.b0 + 0.5 * rss);
    log_tau = std::log(tau);
    chain.refresh();

    const bool in_burn_in = iter < options.hmc.burn_in;
    const bool accepted = chain.step(rng, options.hmc.adapt && in_burn_in);
    if (!in_burn_in && accepted) ++accepted_retained;

    if (iter == options.hmc.burn_in - 1 && chain.divergences() * 2 > options.hmc.burn_in) {
      throw DivergenceError("fit: HMC burn-in diverged (step size " +
                            std::to_string(chain.step_size()) + ")");
    }

    if (!in_burn_in) {
      BnnParams sample;
      sample.theta = chain.position();
      sample.log_tau = log_tau;
      posterior.samples.push_back(std::move(sample));
    }
  }

  HmcDiagnostics diag;
  diag.acceptance_rate = static_cast<double>(accepted_retained) / options.hmc.retained;
  diag.final_step_size = chain.step_size();
  diag.divergences = chain.divergences();
  return {std::move(posterior), diag};
}

Prediction predict(const BnnPosterior& posterior, const Eigen::VectorXd& x, int head) {
  const int m = posterior.sample_count();
  if (m < 1) throw ConfigError("predict: posterior has no samples");
  if (head < 0 || head >= posterior.arch.heads) throw ConfigError("predict: head out of range");

  double mean = 0.0;
  Eigen::VectorXd values(m);
  double aleatoric = 0.0;
  for (int i = 0; i < m; ++i) {
    const auto& s = posterior.samples[static_cast<size_t>(i)];
    values(i) = forward(posterior.arch, s, x)(head);
    mean += values(i);
    aleatoric += 1.0 / s.tau();
  }
  mean /= m;
  aleatoric /= m;
  double epistemic = 0.0;
  for (int i = 0; i < m; ++i) epistemic += (values(i) - mean) * (values(i) - mean);
  epistemic /= m;

  Prediction out;
  out.mean = mean * posterior.y_std + posterior.y_mean;
  out.variance = (epistemic + aleatoric) * posterior.y_std * posterior.y_std;
  return out;
}

Eigen::MatrixXd realize_batch(const BnnPosterior& posterior, int sample_index,
                              const Eigen::MatrixXd& X) {
  const auto& s = posterior.samples.at(static_cast<size_t>(sample_index));
  Eigen::MatrixXd out = forward_batch(posterior.arch, s.theta, X);
  out.array() = out.array() * posterior.y_std + posterior.y_mean;
  return out;
}

double sample_realization(const BnnPosterior& posterior, const Eigen::VectorXd& x, int head,
                          int sample_index, RandomStream& rng, bool with_noise) {
  const auto& s = posterior.samples.at(static_cast<size_t>(sample_index));
  if (head < 0 || head >= posterior.arch.heads) {
    throw ConfigError("sample_realization: head out of range");
  }
  double value = forward(posterior.arch, s, x)(head);
  if (with_noise) value += rng.normal() / std::sqrt(s.tau());
  return value * posterior.y_std + posterior.y_mean;
}

}  // namespace bnnbo
