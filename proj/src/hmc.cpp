#include "bnnbo/hmc.hpp"

#include <cmath>

namespace bnnbo {
namespace {

constexpr double kStepSizeMin = 1e-5;
constexpr double kStepSizeMax = 1.0;

bool all_finite(const Eigen::VectorXd& v) { return v.allFinite(); }

/// Leapfrog with the start-position gradient already known.
LeapfrogResult leapfrog_seeded(const Eigen::VectorXd& q0, const Eigen::VectorXd& p0,
                               const LogProbGradFn& fn, double step_size, int steps,
                               const Eigen::VectorXd& grad0) {
  LeapfrogResult r;
  r.q = q0;
  r.p = p0;
  r.grad = grad0;
  double value = 0.0;

  r.p += 0.5 * step_size * r.grad;
  for (int s = 0; s < steps; ++s) {
    r.q += step_size * r.p;
    if (!all_finite(r.q)) throw NonFiniteError("leapfrog: position diverged");
    value = fn(r.q, r.grad);
    if (!std::isfinite(value) || !all_finite(r.grad)) {
      throw NonFiniteError("leapfrog: non-finite target along trajectory");
    }
    r.p += (s + 1 < steps ? step_size : 0.5 * step_size) * r.grad;
    if (!all_finite(r.p)) throw NonFiniteError("leapfrog: momentum diverged");
  }
  r.log_prob = value;
  return r;
}

}  // namespace

LeapfrogResult leapfrog(const Eigen::VectorXd& q0, const Eigen::VectorXd& p0,
                        const LogProbGradFn& fn, double step_size, int steps) {
  if (steps < 1) throw ConfigError("leapfrog: steps must be >= 1");
  Eigen::VectorXd grad0(q0.size());
  const double value = fn(q0, grad0);
  if (!std::isfinite(value) || !all_finite(grad0)) {
    throw NonFiniteError("leapfrog: non-finite target at the start position");
  }
  return leapfrog_seeded(q0, p0, fn, step_size, steps, grad0);
}

double accept_probability(double h_old, double h_new) {
  const double delta = h_old - h_new;
  if (!std::isfinite(delta)) return 0.0;
  return delta >= 0.0 ? 1.0 : std::exp(delta);
}

HmcChain::HmcChain(LogProbGradFn fn, Eigen::VectorXd init, double step_size, int leapfrog_steps)
    : fn_(std::move(fn)), q_(std::move(init)), step_size_(step_size),
      leapfrog_steps_(leapfrog_steps) {
  if (!all_finite(q_)) throw ConfigError("hmc: initial position must be finite");
  refresh();
}

void HmcChain::refresh() {
  grad_.resize(q_.size());
  value_ = fn_(q_, grad_);
  if (!std::isfinite(value_) || !all_finite(grad_)) {
    throw NonFiniteError("hmc: non-finite target at the current position");
  }
}

bool HmcChain::step(RandomStream& rng, bool adapt) {
  Eigen::VectorXd p(q_.size());
  for (Eigen::Index i = 0; i < p.size(); ++i) p(i) = rng.normal();
  const double h_old = -value_ + 0.5 * p.squaredNorm();

  bool accepted = false;
  try {
    const LeapfrogResult prop = leapfrog_seeded(q_, p, fn_, step_size_, leapfrog_steps_, grad_);
    const double h_new = -prop.log_prob + 0.5 * prop.p.squaredNorm();
    if (rng.uniform() < accept_probability(h_old, h_new)) {
      q_ = prop.q;
      grad_ = prop.grad;
      value_ = prop.log_prob;
      accepted = true;
    }
  } catch (const NonFiniteError&) {
    ++divergences_;
  }

  if (adapt) {
    step_size_ *= accepted ? 1.02 : 0.98;
    step_size_ = std::min(kStepSizeMax, std::max(kStepSizeMin, step_size_));
  }
  return accepted;
}

std::pair<std::vector<Eigen::VectorXd>, HmcDiagnostics> sample(const LogProbGradFn& fn,
                                                               const Eigen::VectorXd& init,
                                                               const HmcConfig& config) {
  config.validate();
  RandomStream rng(config.seed);
  HmcChain chain(fn, init, config.step_size, config.leapfrog_steps);

  for (int i = 0; i < config.burn_in; ++i) chain.step(rng, config.adapt);
  if (config.burn_in > 0 && chain.divergences() * 2 > config.burn_in) {
    throw DivergenceError("hmc: over half of burn-in proposals were non-finite");
  }

  std::vector<Eigen::VectorXd> samples;
  samples.reserve(static_cast<size_t>(config.retained));
  int accepted = 0;
  for (int i = 0; i < config.retained; ++i) {
    if (chain.step(rng, false)) ++accepted;
    samples.push_back(chain.position());
  }

  HmcDiagnostics diag;
  diag.acceptance_rate = static_cast<double>(accepted) / config.retained;
  diag.final_step_size = chain.step_size();
  diag.divergences = chain.divergences();
  return {std::move(samples), diag};
}

}  // namespace bnnbo
