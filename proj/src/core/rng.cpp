#include "psl2/rng.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace psl2 {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

BigInt Rng::uniform_big(const BigInt& bound) {
  if (bound < 1) throw std::invalid_argument("empty range");
  BigInt span = bound - 1;
  std::size_t bits = sgn(span) == 0 ? 0 : mpz_sizeinbase(span.get_mpz_t(), 2);
  std::size_t words = (bits + 63) / 64;
  while (true) {
    BigInt x = 0;
    for (std::size_t i = 0; i < words; ++i) {
      x <<= 64;
      std::uint64_t w = next();
      if (i == 0 && bits % 64 != 0) w >>= 64 - bits % 64;
      BigInt part;
      mpz_import(part.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
      x += part;
    }
    if (x <= span) return x + 1;
  }
}

namespace {

BigInt from_u64(std::uint64_t w) {
  BigInt r;
  mpz_import(r.get_mpz_t(), 1, 1, sizeof(w), 0, 0, &w);
  return r;
}

// Resolves the draw exactly, starting from threshold `first` with prefix bits already drawn.
std::size_t resolve_exact(const std::vector<BigInt>& weights, std::size_t first,
                          std::uint64_t prefix, Rng& rng) {
  BigInt total = std::accumulate(weights.begin(), weights.end(), BigInt(0));
  if (sgn(total) <= 0) throw std::invalid_argument("weights sum to zero");
  std::vector<BigInt> cumulative(weights.size());
  BigInt acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) cumulative[i] = acc += weights[i];
  BigInt p = from_u64(prefix);
  unsigned long k = 64;
  std::size_t i = first;
  while (i + 1 < weights.size()) {
    BigInt scaled_threshold = cumulative[i] << k;
    if ((p + 1) * total <= scaled_threshold) return i;
    if (p * total >= scaled_threshold) {
      ++i;
      continue;
    }
    p = (p << 64) + from_u64(rng.next());
    k += 64;
  }
  return weights.size() - 1;
}

}  // namespace

std::size_t choose_weighted(const std::vector<double>& approx_cdf,
                            const std::function<std::vector<BigInt>()>& exact_weights, Rng& rng,
                            double tol) {
  if (approx_cdf.empty()) throw std::invalid_argument("no outcomes");
  std::uint64_t x = rng.next();
  double lo = std::ldexp(static_cast<double>(x), -64);
  double hi = lo + std::ldexp(1.0, -64);
  for (std::size_t i = 0; i + 1 < approx_cdf.size(); ++i) {
    if (hi <= approx_cdf[i] - tol) return i;
    if (lo >= approx_cdf[i] + tol) continue;
    return resolve_exact(exact_weights(), i, x, rng);
  }
  return approx_cdf.size() - 1;
}

std::size_t choose_weighted(const std::vector<BigInt>& weights, Rng& rng) {
  BigInt total = std::accumulate(weights.begin(), weights.end(), BigInt(0));
  if (sgn(total) <= 0) throw std::invalid_argument("weights sum to zero");
  auto st = scaled(total);
  std::vector<double> cdf(weights.size());
  BigInt acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    cdf[i] = ratio(scaled(acc), st);
  }
  return choose_weighted(cdf, [&] { return weights; }, rng);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return p;
}

}  // namespace psl2
