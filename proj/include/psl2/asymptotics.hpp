#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "psl2/bigint.hpp"
#include "psl2/family.hpp"
#include "psl2/species.hpp"

namespace psl2 {

// Sequences with a closed-form asymptotic equivalent. Coefficients are [z^n] of the
// exponential generating series, except the rooted counts (h_*), which are subgroup
// counts.
enum class AsymptoticFamily {
  t2,          // exp(z + z^2/2)
  t3,          // exp(z + z^2 + z^3/3)
  t3_fi,       // exp(z + z^3/3)
  t2_0,        // exp(z^2/2), even n
  t3_0,        // exp(z^2 + z^3/3)
  g_tilde,     // T2 T3 (Hadamard product)
  g,           // connected part of g_tilde
  h_fi,        // finite index subgroups
  g0_tilde,    // loop-free pairs, even n
  g0,          // connected loop-free pairs, even n
  h_fr_fi,     // free finite index subgroups, n divisible by 6
};

std::optional<AsymptoticFamily> parse_asymptotic_family(std::string_view s);
std::string to_string(AsymptoticFamily f);

// Natural log of the asymptotic equivalent at n; nullopt where the sequence vanishes.
std::optional<double> log_asymptotic(AsymptoticFamily f, int n);

// Natural log of the exact value at n (same normalisation), from the recurrences.
// Returns nullopt where the exact value is 0.
std::vector<std::optional<double>> log_exact(AsymptoticFamily f, int max_n);

// Bounds V_n < H_n < 2 V_n with V_n = n [z^n] G, as natural logs.
struct LogBounds {
  double lower;
  double upper;
};
LogBounds h_bounds(int n);

struct ExpectedType {
  double l2;
  double l3;
  double k3;
  double r;
};
// Leading-order expectations for a uniform size-n subgroup of the family.
ExpectedType expected_type(Family f, double n);

// Large deviation statistic: which marked parameter, and which side.
enum class Statistic { l2, l3, k3 };
enum class Side { lower, upper };

struct DeviationBound {
  double rate;       // f(lambda) or f(mu), negative inside the admissible range
  double scale;      // n^{t/d}
  double log_bound;  // rate * scale; the tail probability is O(exp(log_bound))
};
// Tail bound for P(X <= lambda E) (lower) or P(X >= mu E) (upper).
DeviationBound deviation_exponent(Family f, Statistic s, Side side, double factor, double n);

// Species and marked degree used for a statistic in a family.
SpeciesSpec statistic_species(Family f, Statistic s, int* degree);

// Normalised Bender residuals: ([z^n]G - sum_{k<s} b_k [z^{n-k}]Gt) / [z^{n-s}]Gt with b_k
// the coefficients of 1/Gt.
double bender_residual(const std::vector<BigInt>& totals, const std::vector<BigInt>& connected,
                       int n, int s);

struct ProbabilityRow {
  int n;
  double fi_fraction;         // H^fi_n / H_n
  double fi_scale;            // exp(-n^{2/3} - n^{1/3}/3)
  double free_fraction;       // H^fr_n / H_n (0 for odd n contributions handled as is)
  double free_scale;          // exp(-n^{1/2} - n^{1/3}) for size n
  double non_cr_free_share;   // share of free subgroups that are not cyclically reduced
};
std::vector<ProbabilityRow> probability_reports(int max_n);

}  // namespace psl2
