#pragma once

#include <Eigen/Core>
#include <vector>

#include "bnnbo/common.hpp"

namespace bnnbo {

enum class Activation { Tanh };

/// Feedforward network shape: input -> hidden layers (tanh) -> K linear
/// output heads. K=1 for single-fidelity models, K=2 for the shared-trunk
/// two-fidelity models (head 0 = low, head 1 = high).
struct BnnArchitecture {
  int input_dim = 1;
  std::vector<int> hidden = {100, 100};
  int heads = 1;
  Activation activation = Activation::Tanh;

  int layer_count() const { return static_cast<int>(hidden.size()) + 1; }

  /// Width of layer input l (l=0 is the network input).
  int width_in(int layer) const {
    return layer == 0 ? input_dim : hidden[static_cast<size_t>(layer - 1)];
  }
  int width_out(int layer) const {
    return layer == layer_count() - 1 ? heads : hidden[static_cast<size_t>(layer)];
  }

  int param_count() const {
    int n = 0;
    for (int l = 0; l < layer_count(); ++l) n += width_out(l) * (width_in(l) + 1);
    return n;
  }

  void validate() const {
    if (input_dim < 1) throw ConfigError("network input_dim must be >= 1");
    if (heads != 1 && heads != 2) throw ConfigError("network heads must be 1 or 2");
    for (int w : hidden) {
      if (w < 1) throw ConfigError("hidden widths must be >= 1");
    }
  }
};

/// Flat parameter vector plus the log noise precision. Layout per layer:
/// weight matrix (out x in, column-major) followed by the bias vector.
struct BnnParams {
  Eigen::VectorXd theta;
  double log_tau = 0.0;

  double tau() const { return std::exp(log_tau); }
};

/// Offset of layer `l`'s weight block inside the flat vector.
inline int layer_offset(const BnnArchitecture& arch, int layer) {
  int off = 0;
  for (int l = 0; l < layer; ++l) off += arch.width_out(l) * (arch.width_in(l) + 1);
  return off;
}

inline Eigen::Map<const Eigen::MatrixXd> weight_view(const BnnArchitecture& arch,
                                                     const Eigen::VectorXd& theta, int layer) {
  return {theta.data() + layer_offset(arch, layer), arch.width_out(layer), arch.width_in(layer)};
}

inline Eigen::Map<const Eigen::VectorXd> bias_view(const BnnArchitecture& arch,
                                                   const Eigen::VectorXd& theta, int layer) {
  const int off = layer_offset(arch, layer) + arch.width_out(layer) * arch.width_in(layer);
  return {theta.data() + off, arch.width_out(layer)};
}

inline Eigen::Map<Eigen::MatrixXd> weight_view(const BnnArchitecture& arch, Eigen::VectorXd& theta,
                                               int layer) {
  return {theta.data() + layer_offset(arch, layer), arch.width_out(layer), arch.width_in(layer)};
}

inline Eigen::Map<Eigen::VectorXd> bias_view(const BnnArchitecture& arch, Eigen::VectorXd& theta,
                                             int layer) {
  const int off = layer_offset(arch, layer) + arch.width_out(layer) * arch.width_in(layer);
  return {theta.data() + off, arch.width_out(layer)};
}

/// Single-point forward pass; returns the K head outputs.
Eigen::VectorXd forward(const BnnArchitecture& arch, const BnnParams& params,
                        const Eigen::VectorXd& x);

}  // namespace bnnbo
