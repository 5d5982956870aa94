#include "bnnbo/acquisition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bnnbo {
namespace {

Eigen::MatrixXd gather_columns(const std::vector<DesignPoint>& candidates,
                               const std::vector<std::size_t>& pool) {
  const int d = candidates.front().dim();
  Eigen::MatrixXd X(d, static_cast<Eigen::Index>(pool.size()));
  for (std::size_t c = 0; c < pool.size(); ++c) {
    const auto& z = candidates[pool[c]].z;
    for (int i = 0; i < d; ++i) X(i, static_cast<Eigen::Index>(c)) = z[static_cast<size_t>(i)];
  }
  return X;
}

double fom_of_column(const Eigen::MatrixXd& realization, Eigen::Index col,
                     const ProblemSpec& spec) {
  const auto& w = spec.weights();
  double value = w[0] * realization(0, col);
  for (int i = 1; i < spec.metric_count(); ++i) {
    value += std::min(1.0, std::max(0.0, w[static_cast<size_t>(i)] * realization(i, col)));
  }
  return value;
}

/// One noiseless head realization per metric over the pooled candidates.
/// Rows = metrics, columns = pool entries.
Eigen::MatrixXd realize_pool(const std::vector<BnnPosterior>& posteriors,
                             const std::vector<int>& draw, const Eigen::MatrixXd& X, int head) {
  const auto metrics = static_cast<Eigen::Index>(posteriors.size());
  Eigen::MatrixXd realization(metrics, X.cols());
#pragma omp parallel for schedule(dynamic)
  for (Eigen::Index j = 0; j < metrics; ++j) {
    const auto& post = posteriors[static_cast<size_t>(j)];
    realization.row(j) = realize_batch(post, draw[static_cast<size_t>(j)], X).row(head);
  }
  return realization;
}

void add_objective_noise(Eigen::MatrixXd& realization, const BnnPosterior& objective_posterior,
                         int draw, RandomStream& rng) {
  const double sd =
      objective_posterior.y_std /
      std::sqrt(objective_posterior.samples[static_cast<size_t>(draw)].tau());
  for (Eigen::Index c = 0; c < realization.cols(); ++c) realization(0, c) += sd * rng.normal();
}

std::vector<int> draw_indices(const std::vector<BnnPosterior>& posteriors, RandomStream& rng) {
  std::vector<int> draw(posteriors.size());
  for (size_t j = 0; j < posteriors.size(); ++j) {
    draw[j] = rng.uniform_int(posteriors[j].sample_count());
  }
  return draw;
}

}  // namespace

int select_index_from_realization(const Eigen::MatrixXd& realization, const ProblemSpec& spec) {
  const Eigen::Index cols = realization.cols();
  if (cols == 0) throw InsufficientCandidatesError("selection over an empty candidate set");

  Eigen::Index best_feasible = -1;
  double best_objective = std::numeric_limits<double>::infinity();
  for (Eigen::Index c = 0; c < cols; ++c) {
    bool feasible = true;
    for (int i = 1; i < spec.metric_count(); ++i) {
      if (realization(i, c) > 0.0) {
        feasible = false;
        break;
      }
    }
    if (feasible && realization(0, c) < best_objective) {
      best_objective = realization(0, c);
      best_feasible = c;
    }
  }
  if (best_feasible >= 0) return static_cast<int>(best_feasible);

  Eigen::Index best = 0;
  double best_fom = fom_of_column(realization, 0, spec);
  for (Eigen::Index c = 1; c < cols; ++c) {
    const double f = fom_of_column(realization, c, spec);
    if (f < best_fom) {
      best_fom = f;
      best = c;
    }
  }
  return static_cast<int>(best);
}

std::vector<std::size_t> select_single_fidelity(const std::vector<BnnPosterior>& posteriors,
                                                const std::vector<DesignPoint>& candidates, int q,
                                                const ProblemSpec& spec, RealizationNoise noise,
                                                RandomStream& rng) {
  if (q > static_cast<int>(candidates.size())) {
    throw InsufficientCandidatesError("batch size exceeds candidate pool");
  }
  if (static_cast<int>(posteriors.size()) != spec.metric_count()) {
    throw ConfigError("select: need one posterior per metric");
  }

  std::vector<std::size_t> pool(candidates.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  std::vector<std::size_t> picked;
  picked.reserve(static_cast<size_t>(q));
  for (int slot = 0; slot < q; ++slot) {
    const auto draw = draw_indices(posteriors, rng);
    const Eigen::MatrixXd X = gather_columns(candidates, pool);
    Eigen::MatrixXd realization = realize_pool(posteriors, draw, X, 0);
    if (noise == RealizationNoise::Full) {
      add_objective_noise(realization, posteriors[0], draw[0], rng);
    }
    const int local = select_index_from_realization(realization, spec);
    picked.push_back(pool[static_cast<size_t>(local)]);
    pool.erase(pool.begin() + local);
  }
  return picked;
}

double mf_utility(double fom_low, double fom_high, double delta) {
  return std::max(fom_low - delta, fom_high);
}

double compute_delta(const std::vector<double>& foms_low, const std::vector<double>& foms_high) {
  if (foms_low.empty() || foms_high.empty()) return 0.0;
  const double lo = *std::min_element(foms_low.begin(), foms_low.end());
  const double hi = *std::min_element(foms_high.begin(), foms_high.end());
  return lo - hi;
}

std::vector<std::pair<std::size_t, Fidelity>> select_multi_fidelity(
    const std::vector<BnnPosterior>& posteriors, const std::vector<DesignPoint>& candidates, int q,
    const ProblemSpec& spec, double delta, double p_low, RealizationNoise noise,
    RandomStream& rng) {
  if (q > static_cast<int>(candidates.size())) {
    throw InsufficientCandidatesError("batch size exceeds candidate pool");
  }
  if (static_cast<int>(posteriors.size()) != spec.metric_count()) {
    throw ConfigError("select: need one posterior per metric");
  }
  for (const auto& p : posteriors) {
    if (p.arch.heads != 2) throw ConfigError("select_multi_fidelity: posteriors must have 2 heads");
  }

  std::vector<std::size_t> pool(candidates.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  std::vector<std::pair<std::size_t, Fidelity>> picked;
  picked.reserve(static_cast<size_t>(q));
  for (int slot = 0; slot < q; ++slot) {
    const auto draw = draw_indices(posteriors, rng);
    const Eigen::MatrixXd X = gather_columns(candidates, pool);
    Eigen::MatrixXd low = realize_pool(posteriors, draw, X, 0);
    Eigen::MatrixXd high = realize_pool(posteriors, draw, X, 1);
    if (noise == RealizationNoise::Full) {
      add_objective_noise(low, posteriors[0], draw[0], rng);
      add_objective_noise(high, posteriors[0], draw[0], rng);
    }

    Eigen::Index best = 0;
    double best_utility = std::numeric_limits<double>::infinity();
    for (Eigen::Index c = 0; c < X.cols(); ++c) {
      const double u =
          mf_utility(fom_of_column(low, c, spec), fom_of_column(high, c, spec), delta);
      if (u < best_utility) {
        best_utility = u;
        best = c;
      }
    }
    const Fidelity fid = rng.uniform() < p_low ? Fidelity::Low : Fidelity::High;
    picked.emplace_back(pool[static_cast<size_t>(best)], fid);
    pool.erase(pool.begin() + best);
  }
  return picked;
}

}  // namespace bnnbo
