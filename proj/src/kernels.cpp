#include "bnnbo/kernels.hpp"

#include <cmath>

namespace bnnbo {
namespace {

constexpr int kRowBlock = 128;
constexpr double kLog2Pi = 1.8378770664093454836;

struct BlockAccum {
  std::array<double, 2> sumsq_head = {0.0, 0.0};
  Eigen::VectorXd grad;  // likelihood part of d/d theta; empty if not requested
};

/// Forward + optional backward over one contiguous block of rows.
BlockAccum process_block(const BnnArchitecture& arch, const Eigen::VectorXd& theta, double tau,
                         const Dataset& data, int begin, int count, bool want_grad) {
  const int layers = arch.layer_count();
  BlockAccum acc;

  // Forward, keeping post-activations for the backward pass.
  const Eigen::MatrixXd xb = data.X.middleCols(begin, count);
  std::vector<Eigen::MatrixXd> z(static_cast<size_t>(layers));
  for (int l = 0; l < layers; ++l) {
    const Eigen::MatrixXd& input = (l == 0) ? xb : z[static_cast<size_t>(l - 1)];
    auto& out = z[static_cast<size_t>(l)];
    out.noalias() = weight_view(arch, theta, l) * input;
    out.colwise() += bias_view(arch, theta, l);
    if (l < layers - 1) out = out.array().tanh().matrix();
  }
  const Eigen::MatrixXd& out = z[static_cast<size_t>(layers - 1)];  // heads x count

  // Residuals enter only through each row's own head.
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(arch.heads, count);
  for (int c = 0; c < count; ++c) {
    const int h = data.head[static_cast<size_t>(begin + c)];
    const double r = data.y(begin + c) - out(h, c);
    acc.sumsq_head[static_cast<size_t>(h)] += r * r;
    g(h, c) = tau * r;
  }
  if (!want_grad) return acc;

  acc.grad = Eigen::VectorXd::Zero(arch.param_count());
  Eigen::MatrixXd delta = std::move(g);
  for (int l = layers - 1; l >= 0; --l) {
    const Eigen::MatrixXd& input = (l == 0) ? xb : z[static_cast<size_t>(l - 1)];
    weight_view(arch, acc.grad, l).noalias() = delta * input.transpose();
    bias_view(arch, acc.grad, l) = delta.rowwise().sum();
    if (l > 0) {
      const auto& zi = z[static_cast<size_t>(l - 1)];
      Eigen::MatrixXd next = weight_view(arch, theta, l).transpose() * delta;
      next.array() *= 1.0 - zi.array().square();
      delta = std::move(next);
    }
  }
  return acc;
}

/// Runs all blocks (OpenMP across blocks) and combines them in block order
/// so the result does not depend on the thread count.
BlockAccum accumulate_likelihood(const BnnArchitecture& arch, const Eigen::VectorXd& theta,
                                 double tau, const Dataset& data, bool want_grad) {
  const int n = data.rows();
  const int nblocks = (n + kRowBlock - 1) / kRowBlock;
  std::vector<BlockAccum> parts(static_cast<size_t>(nblocks));

#pragma omp parallel for schedule(static)
  for (int b = 0; b < nblocks; ++b) {
    const int begin = b * kRowBlock;
    const int count = std::min(kRowBlock, n - begin);
    parts[static_cast<size_t>(b)] = process_block(arch, theta, tau, data, begin, count, want_grad);
  }

  BlockAccum total;
  if (want_grad) total.grad = Eigen::VectorXd::Zero(arch.param_count());
  for (const auto& part : parts) {
    total.sumsq_head[0] += part.sumsq_head[0];
    total.sumsq_head[1] += part.sumsq_head[1];
    if (want_grad) total.grad += part.grad;
  }
  return total;
}

double prior_log_density(const BnnArchitecture& arch, const BnnParams& params,
                         const GammaPrior& prior) {
  const int p = arch.param_count();
  const double t = params.log_tau;
  double value = -0.5 * p * kLog2Pi - 0.5 * params.theta.squaredNorm();
  // Gamma prior over tau plus the d tau / d log tau Jacobian.
  value += prior.a0 * std::log(prior.b0) - std::lgamma(prior.a0) + prior.a0 * t -
           prior.b0 * std::exp(t);
  return value;
}

std::array<int, 2> rows_per_head(const Dataset& data) {
  std::array<int, 2> counts = {0, 0};
  for (int h : data.head) counts[static_cast<size_t>(h)]++;
  return counts;
}

}  // namespace

Eigen::MatrixXd forward_batch(const BnnArchitecture& arch, const Eigen::VectorXd& theta,
                              const Eigen::MatrixXd& X) {
  if (X.rows() != arch.input_dim) throw ConfigError("forward_batch: input dimension mismatch");
  if (theta.size() != arch.param_count()) throw ConfigError("forward_batch: parameter size mismatch");
  Eigen::MatrixXd h = X;
  for (int l = 0; l < arch.layer_count(); ++l) {
    Eigen::MatrixXd next = weight_view(arch, theta, l) * h;
    next.colwise() += bias_view(arch, theta, l);
    if (l < arch.layer_count() - 1) next = next.array().tanh().matrix();
    h = std::move(next);
  }
  return h;
}

double log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                 const GammaPrior& prior) {
  const double tau = params.tau();
  const auto acc = accumulate_likelihood(arch, params.theta, tau, data, false);
  const auto counts = rows_per_head(data);
  double value = prior_log_density(arch, params, prior);
  for (int h = 0; h < 2; ++h) {
    value += counts[static_cast<size_t>(h)] * 0.5 * (params.log_tau - kLog2Pi) -
             0.5 * tau * acc.sumsq_head[static_cast<size_t>(h)];
  }
  return value;
}

double grad_log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                      const GammaPrior& prior, Eigen::VectorXd& grad_theta, double& grad_log_tau) {
  const double tau = params.tau();
  const auto acc = accumulate_likelihood(arch, params.theta, tau, data, true);
  const auto counts = rows_per_head(data);
  const double n = static_cast<double>(data.rows());
  const double sumsq = acc.sumsq_head[0] + acc.sumsq_head[1];

  grad_theta = -params.theta + acc.grad;
  grad_log_tau = prior.a0 + 0.5 * n - tau * (prior.b0 + 0.5 * sumsq);

  double value = prior_log_density(arch, params, prior);
  for (int h = 0; h < 2; ++h) {
    value += counts[static_cast<size_t>(h)] * 0.5 * (params.log_tau - kLog2Pi) -
             0.5 * tau * acc.sumsq_head[static_cast<size_t>(h)];
  }
  return value;
}

double residual_sum_squares(const BnnArchitecture& arch, const BnnParams& params,
                            const Dataset& data) {
  const auto acc = accumulate_likelihood(arch, params.theta, params.tau(), data, false);
  return acc.sumsq_head[0] + acc.sumsq_head[1];
}

std::array<double, 2> log_likelihood_by_head(const BnnArchitecture& arch, const BnnParams& params,
                                             const Dataset& data) {
  const double tau = params.tau();
  const auto acc = accumulate_likelihood(arch, params.theta, tau, data, false);
  const auto counts = rows_per_head(data);
  std::array<double, 2> out;
  for (int h = 0; h < 2; ++h) {
    out[static_cast<size_t>(h)] = counts[static_cast<size_t>(h)] * 0.5 * (params.log_tau - kLog2Pi) -
                                  0.5 * tau * acc.sumsq_head[static_cast<size_t>(h)];
  }
  return out;
}

Eigen::VectorXd forward(const BnnArchitecture& arch, const BnnParams& params,
                        const Eigen::VectorXd& x) {
  if (x.size() != arch.input_dim) throw ConfigError("forward: input dimension mismatch");
  return forward_batch(arch, params.theta, x);
}

namespace reference {

std::vector<double> forward_one(const BnnArchitecture& arch, const std::vector<double>& theta,
                                const std::vector<double>& x) {
  std::vector<double> in = x;
  size_t off = 0;
  for (int l = 0; l < arch.layer_count(); ++l) {
    const int rows = arch.width_out(l);
    const int cols = arch.width_in(l);
    std::vector<double> out(static_cast<size_t>(rows), 0.0);
    // Column-major weight block, then biases.
    for (int c = 0; c < cols; ++c) {
      for (int r = 0; r < rows; ++r) {
        out[static_cast<size_t>(r)] +=
            theta[off + static_cast<size_t>(c * rows + r)] * in[static_cast<size_t>(c)];
      }
    }
    off += static_cast<size_t>(rows) * static_cast<size_t>(cols);
    for (int r = 0; r < rows; ++r) out[static_cast<size_t>(r)] += theta[off + static_cast<size_t>(r)];
    off += static_cast<size_t>(rows);
    if (l < arch.layer_count() - 1) {
      for (auto& v : out) v = std::tanh(v);
    }
    in = std::move(out);
  }
  return in;
}

double log_joint(const BnnArchitecture& arch, const BnnParams& params, const Dataset& data,
                 const GammaPrior& prior) {
  const double t = params.log_tau;
  const double tau = std::exp(t);
  const std::vector<double> theta(params.theta.data(), params.theta.data() + params.theta.size());

  double value = -0.5 * arch.param_count() * kLog2Pi;
  for (double w : theta) value -= 0.5 * w * w;
  value += prior.a0 * std::log(prior.b0) - std::lgamma(prior.a0) + prior.a0 * t -
           prior.b0 * tau;

  for (int n = 0; n < data.rows(); ++n) {
    std::vector<double> x(static_cast<size_t>(data.input_dim()));
    for (int i = 0; i < data.input_dim(); ++i) x[static_cast<size_t>(i)] = data.X(i, n);
    const auto phi = forward_one(arch, theta, x);
    const double r = data.y(n) - phi[static_cast<size_t>(data.head[static_cast<size_t>(n)])];
    value += 0.5 * (t - kLog2Pi) - 0.5 * tau * r * r;
  }
  return value;
}

}  // namespace reference

}  // namespace bnnbo
