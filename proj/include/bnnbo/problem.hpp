#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnnbo/common.hpp"

namespace bnnbo {

enum class VarKind { Continuous, Integer };

struct Dimension {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  VarKind kind = VarKind::Continuous;
};

/// Box-bounded design space in engineering units. Integer dimensions must
/// have integral bounds so rounding can never escape the box.
class DesignSpace {
 public:
  DesignSpace() = default;
  explicit DesignSpace(std::vector<Dimension> dims);

  int dim() const { return static_cast<int>(dims_.size()); }
  const Dimension& operator[](int i) const { return dims_[static_cast<size_t>(i)]; }
  const std::vector<Dimension>& dimensions() const { return dims_; }

 private:
  std::vector<Dimension> dims_;
};

/// A design in normalized coordinates, z in [0,1]^d.
struct DesignPoint {
  std::vector<double> z;

  int dim() const { return static_cast<int>(z.size()); }
};

/// One evaluation outcome in slack form: f[0] is the objective, f[1..m] are
/// constraint slacks (feasible iff all <= 0).
struct PerformanceVector {
  std::vector<double> f;
  Fidelity fidelity = Fidelity::High;

  int metric_count() const { return static_cast<int>(f.size()); }
};

/// How one raw metric value maps into slack form.
enum class MetricSense {
  Minimize,  // objective: f0 = value
  Maximize,  // objective: f0 = -value
  Ge,        // constraint value >= threshold: f = threshold - value
  Le,        // constraint value <= threshold: f = value - threshold
};

struct MetricDecl {
  std::string name;
  MetricSense sense = MetricSense::Minimize;
  double threshold = 0.0;               // unused for objective senses
  std::optional<double> weight;         // default: 1 for objective, 1/|threshold| for constraints
};

/// Constrained problem definition: design space plus m+1 metric
/// declarations (objective first). Raw evaluator outputs are transformed
/// into slack form here so feasibility always reads f_i <= 0.
class ProblemSpec {
 public:
  ProblemSpec() = default;
  ProblemSpec(DesignSpace space, std::vector<MetricDecl> metrics);

  const DesignSpace& space() const { return space_; }
  int dim() const { return space_.dim(); }
  int constraint_count() const { return static_cast<int>(metrics_.size()) - 1; }
  int metric_count() const { return static_cast<int>(metrics_.size()); }
  const std::vector<MetricDecl>& metrics() const { return metrics_; }
  const std::vector<double>& weights() const { return weights_; }

  /// Slack-transform raw metric values. Throws EvalPointError on any
  /// non-finite entry and ConfigError on a length mismatch.
  PerformanceVector to_performance(const std::vector<double>& raw, Fidelity fid) const;

 private:
  DesignSpace space_;
  std::vector<MetricDecl> metrics_;
  std::vector<double> weights_;
};

DesignPoint normalize(const DesignSpace& space, const std::vector<double>& values);
std::vector<double> denormalize(const DesignSpace& space, const DesignPoint& point);

/// Weighted scalarization: w0*f0 + sum_i min(1, max(0, w_i*f_i)).
/// Lower is better; the violation part is 0 exactly when feasible.
double fom(const ProblemSpec& spec, const PerformanceVector& perf);

bool is_feasible(const ProblemSpec& spec, const PerformanceVector& perf);

/// Ranking key for a record: FoM first, then objective, then insertion
/// order. precedes() is a strict total order over distinct orders.
struct RankKey {
  double fom = 0.0;
  double objective = 0.0;
  std::uint64_t order = 0;
};

bool precedes(const RankKey& a, const RankKey& b);

}  // namespace bnnbo
