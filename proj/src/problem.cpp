#include "bnnbo/problem.hpp"

#include <algorithm>
#include <cmath>

namespace bnnbo {

DesignSpace::DesignSpace(std::vector<Dimension> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) throw ConfigError("design space needs at least one dimension");
  for (const auto& d : dims_) {
    if (!(d.lower < d.upper)) {
      throw ConfigError("dimension '" + d.name + "': lower bound must be < upper bound");
    }
    if (d.kind == VarKind::Integer &&
        (d.lower != std::floor(d.lower) || d.upper != std::floor(d.upper))) {
      throw ConfigError("dimension '" + d.name + "': integer dimensions need integral bounds");
    }
  }
}

ProblemSpec::ProblemSpec(DesignSpace space, std::vector<MetricDecl> metrics)
    : space_(std::move(space)), metrics_(std::move(metrics)) {
  if (metrics_.empty()) throw ConfigError("problem needs at least the objective metric");
  if (metrics_[0].sense != MetricSense::Minimize && metrics_[0].sense != MetricSense::Maximize) {
    throw ConfigError("first metric must be the objective (min or max sense)");
  }
  weights_.reserve(metrics_.size());
  for (size_t i = 0; i < metrics_.size(); ++i) {
    const auto& m = metrics_[i];
    if (i > 0 && (m.sense == MetricSense::Minimize || m.sense == MetricSense::Maximize)) {
      throw ConfigError("metric '" + m.name + "': only the first metric may be an objective");
    }
    double w;
    if (m.weight) {
      w = *m.weight;
    } else if (i == 0) {
      w = 1.0;
    } else {
      // Dimensionless default: violations are measured relative to the
      // threshold magnitude. Zero thresholds fall back to weight 1.
      w = std::abs(m.threshold) > 1e-12 ? 1.0 / std::abs(m.threshold) : 1.0;
    }
    if (!(w > 0.0)) throw ConfigError("metric '" + m.name + "': weight must be positive");
    weights_.push_back(w);
  }
}

PerformanceVector ProblemSpec::to_performance(const std::vector<double>& raw, Fidelity fid) const {
  if (static_cast<int>(raw.size()) != metric_count()) {
    throw ConfigError("evaluator returned " + std::to_string(raw.size()) + " metrics, expected " +
                      std::to_string(metric_count()));
  }
  PerformanceVector perf;
  perf.fidelity = fid;
  perf.f.resize(raw.size());
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!std::isfinite(raw[i])) {
      throw EvalPointError("non-finite value for metric '" + metrics_[i].name + "'");
    }
    switch (metrics_[i].sense) {
      case MetricSense::Minimize: perf.f[i] = raw[i]; break;
      case MetricSense::Maximize: perf.f[i] = -raw[i]; break;
      case MetricSense::Ge: perf.f[i] = metrics_[i].threshold - raw[i]; break;
      case MetricSense::Le: perf.f[i] = raw[i] - metrics_[i].threshold; break;
    }
  }
  return perf;
}

DesignPoint normalize(const DesignSpace& space, const std::vector<double>& values) {
  if (static_cast<int>(values.size()) != space.dim()) {
    throw ConfigError("normalize: value vector has wrong length");
  }
  DesignPoint p;
  p.z.resize(values.size());
  for (int i = 0; i < space.dim(); ++i) {
    const auto& d = space[i];
    const double v = values[static_cast<size_t>(i)];
    if (v < d.lower || v > d.upper) {
      throw OutOfBoundsError("value " + std::to_string(v) + " outside [" +
                             std::to_string(d.lower) + ", " + std::to_string(d.upper) +
                             "] for dimension '" + d.name + "'");
    }
    p.z[static_cast<size_t>(i)] = (v - d.lower) / (d.upper - d.lower);
  }
  return p;
}

std::vector<double> denormalize(const DesignSpace& space, const DesignPoint& point) {
  if (point.dim() != space.dim()) throw ConfigError("denormalize: point has wrong length");
  std::vector<double> values(point.z.size());
  for (int i = 0; i < space.dim(); ++i) {
    const auto& d = space[i];
    const double z = point.z[static_cast<size_t>(i)];
    double v = d.lower + z * (d.upper - d.lower);
    if (d.kind == VarKind::Integer) {
      v = std::floor(v + 0.5);  // round half-up
    }
    values[static_cast<size_t>(i)] = v;
  }
  return values;
}

double fom(const ProblemSpec& spec, const PerformanceVector& perf) {
  const auto& w = spec.weights();
  double value = w[0] * perf.f[0];
  for (int i = 1; i < spec.metric_count(); ++i) {
    const double violation = w[static_cast<size_t>(i)] * perf.f[static_cast<size_t>(i)];
    value += std::min(1.0, std::max(0.0, violation));
  }
  return value;
}

bool is_feasible(const ProblemSpec& spec, const PerformanceVector& perf) {
  for (int i = 1; i < spec.metric_count(); ++i) {
    if (perf.f[static_cast<size_t>(i)] > 0.0) return false;
  }
  return true;
}

bool precedes(const RankKey& a, const RankKey& b) {
  if (a.fom != b.fom) return a.fom < b.fom;
  if (a.objective != b.objective) return a.objective < b.objective;
  return a.order < b.order;
}

}  // namespace bnnbo
