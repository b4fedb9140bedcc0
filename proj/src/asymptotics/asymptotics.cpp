#include "psl2/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "psl2/enumeration.hpp"

namespace psl2 {

namespace {

constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);
const double kLog6 = std::log(6.0);

struct Named {
  AsymptoticFamily f;
  const char* name;
};
constexpr Named kNames[] = {
    {AsymptoticFamily::t2, "t2"},       {AsymptoticFamily::t3, "t3"},
    {AsymptoticFamily::t3_fi, "t3_fi"}, {AsymptoticFamily::t2_0, "t2_0"},
    {AsymptoticFamily::t3_0, "t3_0"},   {AsymptoticFamily::g_tilde, "g_tilde"},
    {AsymptoticFamily::g, "g"},         {AsymptoticFamily::h_fi, "h_fi"},
    {AsymptoticFamily::g0_tilde, "g0_tilde"}, {AsymptoticFamily::g0, "g0"},
    {AsymptoticFamily::h_fr_fi, "h_fr_fi"},
};

double log_general(double n) {
  return -17.0 / 36 - 0.5 * std::log(12 * kPi * n) + n / 6 * std::log(n) - n / 6 +
         std::pow(n, 2.0 / 3) + std::sqrt(n) + std::cbrt(n) / 3;
}

// Loop-free pairs at size 2m.
double log_loop_free_pairs(double m) {
  return 4.0 / 9 - 0.5 * std::log(6 * kPi) + m / 3 * std::log(m) - (1 - kLog2) * m / 3 +
         std::pow(2.0, 2.0 / 3) * std::pow(m, 2.0 / 3) - std::pow(2.0, 4.0 / 3) / 3 * std::cbrt(m) -
         0.5 * std::log(m);
}

std::vector<std::optional<double>> log_egs(const std::vector<BigInt>& counts) {
  std::vector<std::optional<double>> out(counts.size());
  for (std::size_t n = 0; n < counts.size(); ++n)
    if (sgn(counts[n]) > 0) out[n] = log_big(counts[n]) - std::lgamma(static_cast<double>(n) + 1);
  return out;
}

std::vector<std::optional<double>> log_plain(const std::vector<BigInt>& counts) {
  std::vector<std::optional<double>> out(counts.size());
  for (std::size_t n = 0; n < counts.size(); ++n)
    if (sgn(counts[n]) > 0) out[n] = log_big(counts[n]);
  return out;
}

std::vector<BigInt> product(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::vector<BigInt> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

}  // namespace

std::optional<AsymptoticFamily> parse_asymptotic_family(std::string_view s) {
  for (const auto& x : kNames)
    if (s == x.name) return x.f;
  return std::nullopt;
}

std::string to_string(AsymptoticFamily f) {
  for (const auto& x : kNames)
    if (x.f == f) return x.name;
  return "?";
}

std::optional<double> log_asymptotic(AsymptoticFamily f, int n_int) {
  if (n_int < 1) return std::nullopt;
  double n = n_int;
  switch (f) {
    case AsymptoticFamily::t2:
      return -0.25 - std::log(2 * std::sqrt(kPi * n)) - n / 2 * std::log(n) + n / 2 + std::sqrt(n);
    case AsymptoticFamily::t3:
      return -2.0 / 9 - 0.5 * std::log(6 * kPi * n) - n / 3 * std::log(n) + n / 3 +
             std::pow(n, 2.0 / 3) + std::cbrt(n) / 3;
    case AsymptoticFamily::t3_fi:
      return -0.5 * std::log(6 * kPi * n) - n / 3 * std::log(n) + n / 3 + std::cbrt(n);
    case AsymptoticFamily::t2_0: {
      if (n_int % 2 != 0) return std::nullopt;
      double m = n / 2;
      return -0.5 * std::log(2 * kPi * m) - m * std::log(m) + (1 - kLog2) * m;
    }
    case AsymptoticFamily::t3_0: {
      double m = n / 2;
      return 4.0 / 9 - 0.5 * std::log(12 * kPi * m) - 2 * m / 3 * std::log(m) +
             2 * (1 - kLog2) * m / 3 + std::pow(2.0, 2.0 / 3) * std::pow(m, 2.0 / 3) -
             std::pow(2.0, 4.0 / 3) / 3 * std::cbrt(m);
    }
    case AsymptoticFamily::g_tilde:
    case AsymptoticFamily::g: return log_general(n);
    case AsymptoticFamily::h_fi:
      return -0.25 + 0.5 * std::log(n) - 0.5 * std::log(12 * kPi) + n / 6 * std::log(n) - n / 6 +
             std::sqrt(n) + std::cbrt(n);
    case AsymptoticFamily::g0_tilde:
    case AsymptoticFamily::g0:
      if (n_int % 2 != 0) return std::nullopt;
      return log_loop_free_pairs(n / 2);
    case AsymptoticFamily::h_fr_fi: {
      if (n_int % 6 != 0) return std::nullopt;
      double m = n / 6;
      // H = n [z^n] G at n = 6m.
      return kLog6 + 0.5 * std::log(m) - 0.5 * std::log(2 * kPi) + m * std::log(m) - (1 - kLog6) * m;
    }
  }
  return std::nullopt;
}

std::vector<std::optional<double>> log_exact(AsymptoticFamily f, int max_n) {
  switch (f) {
    case AsymptoticFamily::t2: return log_egs(count_sequence(involution_species(), max_n));
    case AsymptoticFamily::t3: return log_egs(count_sequence(order3_species(), max_n));
    case AsymptoticFamily::t3_fi: return log_egs(count_sequence(order3_permutation_species(), max_n));
    case AsymptoticFamily::t2_0: return log_egs(count_sequence(loop_free_involution_species(), max_n));
    case AsymptoticFamily::t3_0: return log_egs(count_sequence(loop_free_order3_species(), max_n));
    case AsymptoticFamily::g_tilde: return log_egs(loop_moment_tables(max_n).totals);
    case AsymptoticFamily::g: return log_egs(loop_moment_tables(max_n).connected);
    case AsymptoticFamily::h_fi: return log_plain(count_finite_index(max_n));
    case AsymptoticFamily::g0_tilde:
      return log_egs(product(count_sequence(loop_free_involution_species(), max_n),
                             count_sequence(loop_free_order3_species(), max_n)));
    case AsymptoticFamily::g0: return log_egs(free_tables_univariate(max_n).g0_total);
    case AsymptoticFamily::h_fr_fi: return log_plain(count_free_finite_index(max_n));
  }
  return {};
}

LogBounds h_bounds(int n) {
  double v = std::log(static_cast<double>(n)) + log_general(n);
  return {v, v + kLog2};
}

ExpectedType expected_type(Family f, double n) {
  switch (f) {
    case Family::all:
      return {std::sqrt(n), std::cbrt(n), std::pow(n, 2.0 / 3), n / 6 - std::pow(n, 2.0 / 3) / 3};
    case Family::finite_index: return {std::sqrt(n), std::cbrt(n), 0.0, n / 6 - std::sqrt(n) / 2};
    case Family::cr_free:
    case Family::free: return {0.0, 0.0, std::pow(n, 2.0 / 3), (n - std::pow(n, 2.0 / 3)) / 6};
    case Family::free_finite_index: return {0.0, 0.0, 0.0, n / 6};
  }
  return {};
}

SpeciesSpec statistic_species(Family f, Statistic s, int* degree) {
  switch (s) {
    case Statistic::l2:
      if (f == Family::all || f == Family::finite_index) {
        *degree = 1;
        return involution_species();
      }
      break;
    case Statistic::l3:
      if (f == Family::all) {
        *degree = 1;
        return order3_species();
      }
      if (f == Family::finite_index) {
        *degree = 1;
        return order3_permutation_species();
      }
      break;
    case Statistic::k3:
      *degree = 2;
      if (f == Family::all) return order3_species();
      if (f == Family::free || f == Family::cr_free) return loop_free_order3_species();
      break;
  }
  throw std::invalid_argument("statistic is constant in family " + to_string(f));
}

DeviationBound deviation_exponent(Family f, Statistic s, Side side, double factor, double n) {
  int t = 0;
  auto spec = statistic_species(f, s, &t);
  auto th = tail_thresholds(spec, t);
  if (side == Side::lower && !(factor > 0 && factor < th.lambda0))
    throw std::invalid_argument("lower factor outside (0, lambda0)");
  if (side == Side::upper && !(factor > th.mu0))
    throw std::invalid_argument("upper factor must exceed mu0");
  DeviationBound d;
  d.rate = rate_function(spec, t, factor);
  d.scale = std::pow(n, static_cast<double>(t) / spec.degree());
  d.log_bound = d.rate * d.scale;
  return d;
}

double bender_residual(const std::vector<BigInt>& totals, const std::vector<BigInt>& connected,
                       int n, int s) {
  if (n - s < 0 || n >= static_cast<int>(totals.size())) throw std::out_of_range("bender index");
  std::vector<BigRat> a(n + 1);
  a[0] = 1;
  for (int k = 1; k <= n; ++k) a[k] = BigRat(totals[k], factorial(k));
  for (auto& x : a) x.canonicalize();
  auto b = inverse_series(a, s);
  BigRat residual(connected[n], factorial(n));
  residual.canonicalize();
  for (int k = 0; k < s; ++k) residual -= b[k] * a[n - k];
  residual /= a[n - s];
  return residual.get_d();
}

std::vector<ProbabilityRow> probability_reports(int max_n) {
  auto all = count_all_univariate(max_n);
  auto fi = count_finite_index(max_n);
  auto fr = free_tables_univariate(max_n);
  std::vector<ProbabilityRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    ProbabilityRow r{};
    r.n = n;
    double log_h = log_big(all[n]);
    r.fi_fraction = std::exp(log_big(fi[n]) - log_h);
    r.fi_scale = std::exp(-std::pow(n, 2.0 / 3) - std::cbrt(n) / 3);
    BigInt cr = n >= 1 ? exact_div(fr.g0_total[n], factorial(n - 1)) : BigInt(0);
    BigInt non_cr = exact_div(fr.g1[n], factorial(n));
    BigInt free_total = cr + non_cr;
    r.free_fraction = sgn(free_total) > 0 ? std::exp(log_big(free_total) - log_h) : 0.0;
    r.free_scale = std::exp(-std::sqrt(n) - std::cbrt(n));
    r.non_cr_free_share =
        sgn(free_total) > 0 ? BigRat(non_cr, free_total).get_d() : 0.0;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace psl2
