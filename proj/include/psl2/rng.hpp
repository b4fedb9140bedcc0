#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "psl2/bigint.hpp"

namespace psl2 {

// Seeded 64-bit generator. Integer draws use explicit rejection so streams are identical
// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [1, bound]; bound >= 1.
  BigInt uniform_big(const BigInt& bound);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

// Draws an index i with probability w_i / sum(w). approx_cdf[i] approximates the
// cumulative fraction up to and including i with absolute error well below 1e-10;
// exact_weights is only evaluated when the drawn bits fall too close to a boundary, so
// the result is exactly distributed. A larger tolerance forces the exact path more often.
std::size_t choose_weighted(const std::vector<double>& approx_cdf,
                            const std::function<std::vector<BigInt>()>& exact_weights, Rng& rng,
                            double tolerance = 1e-10);

std::size_t choose_weighted(const std::vector<BigInt>& weights, Rng& rng);

// Uniform random permutation of 0..n-1 (Fisher-Yates).
std::vector<int> random_permutation(int n, Rng& rng);

}  // namespace psl2
