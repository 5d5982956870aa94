#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <utility>
#include <vector>

#include "bnnbo/bnn.hpp"
#include "bnnbo/problem.hpp"
#include "bnnbo/rng.hpp"

namespace bnnbo {

/// Whether Thompson realizations carry aleatoric noise. Constraint
/// screening always uses the noiseless head outputs; Full adds observation
/// noise to the objective realization only.
enum class RealizationNoise { None, Full };

/// Alg-1 slot rule on a realization matrix (rows = metrics, columns =
/// candidates): if any column is realization-feasible (rows 1..m all <= 0)
/// pick the feasible column with minimum objective, otherwise the column
/// with minimum FoM. Ties break to the lowest column index.
int select_index_from_realization(const Eigen::MatrixXd& realization, const ProblemSpec& spec);

/// Thompson-sampling batch selection without replacement: one fresh
/// posterior draw per metric per slot. Returns indices into `candidates`
/// in selection order. Throws InsufficientCandidatesError when q exceeds
/// the pool.
std::vector<std::size_t> select_single_fidelity(const std::vector<BnnPosterior>& posteriors,
                                                const std::vector<DesignPoint>& candidates, int q,
                                                const ProblemSpec& spec, RealizationNoise noise,
                                                RandomStream& rng);

/// Conservative two-fidelity utility: max(fom_low - delta, fom_high).
/// Lower is better; selection is argmin.
double mf_utility(double fom_low, double fom_high, double delta);

/// Delta = min FoM over low-fidelity records - min FoM over high-fidelity
/// records; 0 when either side is empty.
double compute_delta(const std::vector<double>& foms_low, const std::vector<double>& foms_high);

/// Multi-fidelity batch selection: per slot, realize both heads, rank by
/// mf_utility, pick the argmin, then assign Low fidelity with probability
/// p_low. Returns (candidate index, fidelity) pairs in selection order.
std::vector<std::pair<std::size_t, Fidelity>> select_multi_fidelity(
    const std::vector<BnnPosterior>& posteriors, const std::vector<DesignPoint>& candidates, int q,
    const ProblemSpec& spec, double delta, double p_low, RealizationNoise noise, RandomStream& rng);

}  // namespace bnnbo
