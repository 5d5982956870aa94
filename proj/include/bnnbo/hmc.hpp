#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "bnnbo/common.hpp"
#include "bnnbo/rng.hpp"

namespace bnnbo {

struct HmcConfig {
  double step_size = 0.005;
  int leapfrog_steps = 30;
  int burn_in = 200;
  int retained = 200;
  std::uint64_t seed = 0;
  bool adapt = true;
  double target_accept = 0.75;  // informational; the adaptation rule is fixed

  void validate() const {
    if (!(step_size > 0.0)) throw ConfigError("hmc: step_size must be > 0");
    if (leapfrog_steps < 1) throw ConfigError("hmc: leapfrog_steps must be >= 1");
    if (burn_in < 0) throw ConfigError("hmc: burn_in must be >= 0");
    if (retained < 1) throw ConfigError("hmc: retained must be >= 1");
  }
};

struct HmcDiagnostics {
  double acceptance_rate = 0.0;  // over the retained phase
  double final_step_size = 0.0;
  int divergences = 0;
};

/// Evaluates log pi(q) and writes its gradient. Must return finite values
/// wherever the chain starts.
using LogProbGradFn = std::function<double(const Eigen::VectorXd& q, Eigen::VectorXd& grad)>;

struct LeapfrogResult {
  Eigen::VectorXd q;
  Eigen::VectorXd p;
  double log_prob;         // log pi at the final position
  Eigen::VectorXd grad;    // gradient at the final position
};

/// Half-step / full-step / half-step leapfrog under
/// H(q, p) = -log pi(q) + |p|^2 / 2. Throws NonFiniteError if any
/// intermediate state or gradient is NaN/Inf.
LeapfrogResult leapfrog(const Eigen::VectorXd& q, const Eigen::VectorXd& p,
                        const LogProbGradFn& fn, double step_size, int steps);

/// min(1, exp(h_old - h_new)), computed without overflow.
double accept_probability(double h_old, double h_new);

/// One Metropolis-adjusted HMC chain with cached target value/gradient.
/// The caller owns the random stream so the chain can be interleaved with
/// other updates (e.g. a Gibbs step that changes the target); call
/// refresh() after any external change to the target density.
class HmcChain {
 public:
  HmcChain(LogProbGradFn fn, Eigen::VectorXd init, double step_size, int leapfrog_steps);

  /// One propose/accept step. If adapt is set, the step size is multiplied
  /// by 1.02 on accept and 0.98 on reject, clamped to [1e-5, 1].
  bool step(RandomStream& rng, bool adapt);

  /// Recompute the cached value/gradient at the current position.
  void refresh();

  const Eigen::VectorXd& position() const { return q_; }
  double log_prob() const { return value_; }
  double step_size() const { return step_size_; }
  int divergences() const { return divergences_; }

 private:
  LogProbGradFn fn_;
  Eigen::VectorXd q_;
  Eigen::VectorXd grad_;
  double value_ = 0.0;
  double step_size_;
  int leapfrog_steps_;
  int divergences_ = 0;
};

/// Full sampling run: burn-in (with optional step-size adaptation), then
/// `retained` samples, one per iteration. Throws DivergenceError if more
/// than half of the burn-in proposals were non-finite.
std::pair<std::vector<Eigen::VectorXd>, HmcDiagnostics> sample(const LogProbGradFn& fn,
                                                               const Eigen::VectorXd& init,
                                                               const HmcConfig& config);

}  // namespace bnnbo
