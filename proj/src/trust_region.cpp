#include "bnnbo/trust_region.hpp"

#include <algorithm>
#include <cmath>

namespace bnnbo {

TrustRegionState tr_init(const DesignPoint& center, const TrustRegionConfig& config) {
  config.validate();
  for (double z : center.z) {
    if (z < 0.0 || z > 1.0) throw OutOfBoundsError("trust region center must lie in [0,1]^d");
  }
  TrustRegionState state;
  state.center = center;
  state.side_length = config.l_init;
  return state;
}

TrustRegionState tr_restart(const TrustRegionState& old_state, const DesignPoint& new_center,
                            const TrustRegionConfig& config) {
  TrustRegionState state = tr_init(new_center, config);
  state.restarts = old_state.restarts + 1;
  return state;
}

TrustRegionUpdate record_batch(const TrustRegionState& state, const TrustRegionConfig& config,
                               bool improved, const std::optional<DesignPoint>& new_best) {
  TrustRegionUpdate update;
  update.state = state;
  auto& s = update.state;

  if (improved) {
    s.n_s += 1;
    s.n_f = 0;
    if (new_best) s.center = *new_best;
  } else {
    s.n_f += 1;
    s.n_s = 0;
  }

  if (s.n_s == config.tau_s) {
    s.side_length = std::min(2.0 * s.side_length, config.l_max);
    s.n_s = 0;
  }
  if (s.n_f == config.tau_f) {
    s.side_length = 0.5 * s.side_length;
    s.n_f = 0;
  }
  if (s.side_length < config.l_min) update.restart_needed = true;
  return update;
}

std::vector<DesignPoint> generate_candidates(const TrustRegionState& state, int count,
                                             const std::vector<double>* lengthscales,
                                             ScrambledHalton& qmc, RandomStream& rng) {
  if (count < 1) throw ConfigError("generate_candidates: count must be >= 1");
  const int d = state.center.dim();
  const double perturb_prob = std::min(1.0, 20.0 / d);

  // Per-dimension half-widths; isotropic unless lengthscales are given.
  std::vector<double> half(static_cast<size_t>(d), 0.5 * state.side_length);
  if (lengthscales && !lengthscales->empty()) {
    double mean = 0.0;
    for (double v : *lengthscales) mean += v;
    mean /= static_cast<double>(lengthscales->size());
    for (int i = 0; i < d; ++i) {
      half[static_cast<size_t>(i)] *= (*lengthscales)[static_cast<size_t>(i)] / mean;
    }
  }

  std::vector<DesignPoint> points;
  points.reserve(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n) {
    const std::vector<double> u = qmc.next();
    DesignPoint p;
    p.z.resize(static_cast<size_t>(d));

    int perturbed = 0;
    for (int i = 0; i < d; ++i) {
      const double c = state.center.z[static_cast<size_t>(i)];
      if (perturb_prob >= 1.0 || rng.uniform() < perturb_prob) {
        const double lo = std::max(0.0, c - half[static_cast<size_t>(i)]);
        const double hi = std::min(1.0, c + half[static_cast<size_t>(i)]);
        p.z[static_cast<size_t>(i)] = lo + u[static_cast<size_t>(i)] * (hi - lo);
        ++perturbed;
      } else {
        p.z[static_cast<size_t>(i)] = c;
      }
    }
    if (perturbed == 0) {
      const int i = rng.uniform_int(d);
      const double c = state.center.z[static_cast<size_t>(i)];
      const double lo = std::max(0.0, c - half[static_cast<size_t>(i)]);
      const double hi = std::min(1.0, c + half[static_cast<size_t>(i)]);
      p.z[static_cast<size_t>(i)] = lo + u[static_cast<size_t>(i)] * (hi - lo);
    }
    points.push_back(std::move(p));
  }
  return points;
}

}  // namespace bnnbo
