#pragma once

#include <cstdint>
#include <vector>

namespace bnnbo {

/// Low-discrepancy point stream: Halton sequence randomized by a
/// per-dimension Cranley-Patterson rotation. The rotation keeps points
/// distinct per index and makes independent streams reproducible per seed.
class ScrambledHalton {
 public:
  ScrambledHalton(int dim, std::uint64_t seed);

  /// Next point in [0,1)^d. Index 0 (the all-zeros Halton point) is skipped.
  std::vector<double> next();

  int dim() const { return static_cast<int>(bases_.size()); }
  std::uint64_t index() const { return index_; }

  /// Resume support: fast-forward to a given index.
  void seek(std::uint64_t index) { index_ = index; }

 private:
  std::vector<int> bases_;
  std::vector<double> shifts_;
  std::uint64_t index_ = 1;
};

/// Radical-inverse of n in the given base (van der Corput).
double radical_inverse(std::uint64_t n, int base);

}  // namespace bnnbo
