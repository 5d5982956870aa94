#include "bnnbo/qmc.hpp"

#include <cmath>
#include <stdexcept>

#include "bnnbo/rng.hpp"

namespace bnnbo {
namespace {

std::vector<int> first_primes(int count) {
  std::vector<int> primes;
  primes.reserve(static_cast<size_t>(count));
  int candidate = 2;
  while (static_cast<int>(primes.size()) < count) {
    bool is_prime = true;
    for (int p : primes) {
      if (p * p > candidate) break;
      if (candidate % p == 0) {
        is_prime = false;
        break;
      }
    }
    if (is_prime) primes.push_back(candidate);
    ++candidate;
  }
  return primes;
}

}  // namespace

double radical_inverse(std::uint64_t n, int base) {
  double inv_base = 1.0 / base;
  double factor = inv_base;
  double result = 0.0;
  while (n > 0) {
    result += static_cast<double>(n % static_cast<std::uint64_t>(base)) * factor;
    n /= static_cast<std::uint64_t>(base);
    factor *= inv_base;
  }
  return result;
}

ScrambledHalton::ScrambledHalton(int dim, std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("ScrambledHalton: dim must be >= 1");
  bases_ = first_primes(dim);
  shifts_.resize(static_cast<size_t>(dim));
  RandomStream rng(derive_seed(seed, {0x4a4c4f57ULL}));
  for (auto& s : shifts_) s = rng.uniform();
}

std::vector<double> ScrambledHalton::next() {
  std::vector<double> point(bases_.size());
  for (size_t i = 0; i < bases_.size(); ++i) {
    double u = radical_inverse(index_, bases_[i]) + shifts_[i];
    if (u >= 1.0) u -= 1.0;
    point[i] = u;
  }
  ++index_;
  return point;
}

}  // namespace bnnbo
