#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "psl2/bigint.hpp"
#include "psl2/rng.hpp"

namespace psl2 {

// Polynomial S(z) = sum s_i z^i with rational coefficients, s_0 = 0. The species SET(S)
// has exponential generating series exp(S(z)).
class SpeciesSpec {
 public:
  SpeciesSpec() = default;
  SpeciesSpec(std::string name, std::vector<std::pair<int, BigRat>> terms);

  const std::string& name() const { return name_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigRat& coeff(int i) const;
  // Labelled structures of size i on a fixed atom set: i! s_i.
  std::int64_t shapes(int i) const;

  double eval(double z) const;                 // S(z)
  double eval_derivative(double z) const;      // S'(z)
  double eval_second_derivative(double z) const;

 private:
  std::string name_;
  std::vector<BigRat> coeffs_;
  std::vector<std::int64_t> shapes_;
};

// z + z^2/2: involutions (a-structure).
SpeciesSpec involution_species();
// z + z^2 + z^3/3: partial injections with cycles of length <= 3 closed (b-structure).
SpeciesSpec order3_species();
// z + z^3/3: permutations of order dividing 3.
SpeciesSpec order3_permutation_species();
// z^2/2: fixed-point-free involutions.
SpeciesSpec loop_free_involution_species();
// z^2 + z^3/3: b-structures without loops.
SpeciesSpec loop_free_order3_species();
// z^3/3: fixed-point-free permutations of order 3.
SpeciesSpec triangle_species();

// a_n = n! [z^n] exp(S), n = 0..max_n, by the recurrence
// a_n = sum_i C(n-1, i-1) i! s_i a_{n-i}.
std::vector<BigInt> count_sequence(const SpeciesSpec& s, int max_n);

// Count table with cached floating approximations, used by the sampler.
struct CountTable {
  SpeciesSpec spec;
  std::vector<BigInt> values;
  std::vector<Scaled> approx;

  CountTable() = default;
  CountTable(SpeciesSpec s, int max_n);
  int max_size() const { return static_cast<int>(values.size()) - 1; }
};

// Root c of z S'(z) = n on (0, (n / (d s_d))^{1/d}] by bisection.
double saddle_point(const SpeciesSpec& s, double n);

// Natural log of the saddle point estimate of [z^n] exp(S(z)).
double log_asymptotic_estimate(const SpeciesSpec& s, int n);

// Expected number of size-t components in a uniform structure of size n, leading order
// s_t (d s_d)^{-t/d} n^{t/d}.
double expected_components(const SpeciesSpec& s, int t, double n);

// Exact expectation s_t n!/(n-t)! a_{n-t} / a_n.
BigRat exact_expected_components(const SpeciesSpec& s, int t, int n,
                                 const std::vector<BigInt>& counts);

// f(r) = (r - 1) s_t (d s_d)^{-t/d} - r log r.
double rate_function(const SpeciesSpec& s, int t, double r);

// lambda0 <= 1 <= mu0 with f < 0 on (0, lambda0) and on (mu0, infinity).
struct TailThresholds {
  double lambda0;
  double mu0;
};
TailThresholds tail_thresholds(const SpeciesSpec& s, int t);

// Coefficients b_0..b_{count-1} of 1 / A(z) for A(z) = sum A_k z^k with A_0 = 1.
std::vector<BigRat> inverse_series(const std::vector<BigRat>& a, int count);

// Log of an exponential generating series, coefficients as counts:
// g(n) = gt(n) - sum_{m=1}^{n-1} C(n-1, m-1) g(m) gt(n-m), with gt(0) = 1 implied.
std::vector<BigInt> connected_transfer(const std::vector<BigInt>& totals);
// Inverse direction: gt(n) = g(n) + sum_{m=1}^{n-1} C(n-1, m-1) g(m) gt(n-m).
std::vector<BigInt> exponential_transfer(const std::vector<BigInt>& connected);

// Bivariate version with a marked parameter: totals[n][l].
using BivariateTable = std::vector<std::vector<BigInt>>;
BivariateTable connected_transfer(const BivariateTable& totals);

// A labelled SET(S) structure: each component is (size, shape index, atoms).
struct Component {
  int size;
  std::int64_t shape;
  std::vector<int> atoms;
};
struct SetStructure {
  int n = 0;
  std::vector<Component> components;
};

// Uniform labelled structure of size n by the recursive method.
SetStructure sample_set(const CountTable& table, int n, Rng& rng);

// All labelled structures of size n (for small n).
std::vector<SetStructure> enumerate_sets(const SpeciesSpec& s, int n);

}  // namespace psl2
