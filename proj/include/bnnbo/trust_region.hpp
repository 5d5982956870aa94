#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bnnbo/problem.hpp"
#include "bnnbo/qmc.hpp"
#include "bnnbo/rng.hpp"

namespace bnnbo {

struct TrustRegionConfig {
  double l_init = 0.8;
  double l_min = 0.0625;  // 0.5^4
  double l_max = 1.6;
  int tau_s = 3;  // successes before doubling
  int tau_f = 2;  // failures before halving

  void validate() const {
    if (!(l_init > 0.0 && l_init <= l_max)) throw ConfigError("trust region: need 0 < l_init <= l_max");
    if (!(l_min > 0.0 && l_min < l_init)) throw ConfigError("trust region: need 0 < l_min < l_init");
    if (tau_s < 1 || tau_f < 1) throw ConfigError("trust region: tolerances must be >= 1");
  }
};

/// Hypercube trust region around the incumbent. The side length moves only
/// by exact factors of 2: doubled (capped at l_max) after tau_s consecutive
/// successes, halved after tau_f consecutive failures. Falling below l_min
/// signals a restart.
struct TrustRegionState {
  DesignPoint center;
  double side_length = 0.8;
  int n_s = 0;
  int n_f = 0;
  int restarts = 0;
};

TrustRegionState tr_init(const DesignPoint& center, const TrustRegionConfig& config);

/// New region after a collapse; carries the incremented restart count.
TrustRegionState tr_restart(const TrustRegionState& old_state, const DesignPoint& new_center,
                            const TrustRegionConfig& config);

struct TrustRegionUpdate {
  TrustRegionState state;
  bool restart_needed = false;
};

/// Applies one batch outcome. An improving batch bumps n_s, clears n_f and
/// recenters on the new best; a failing batch does the reverse.
TrustRegionUpdate record_batch(const TrustRegionState& state, const TrustRegionConfig& config,
                               bool improved, const std::optional<DesignPoint>& new_best);

/// r candidate points inside [center +- L/2]^d intersected with [0,1]^d.
/// Points come from a scrambled low-discrepancy stream; each candidate
/// perturbs a random subset of dimensions (probability min(1, 20/d) per
/// dimension, at least one) and copies the center elsewhere. Optional
/// per-dimension lengthscales turn the cube into a box with the same
/// volume-normalized scale.
std::vector<DesignPoint> generate_candidates(const TrustRegionState& state, int count,
                                             const std::vector<double>* lengthscales,
                                             ScrambledHalton& qmc, RandomStream& rng);

}  // namespace bnnbo
