#include "psl2/species.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace psl2 {

SpeciesSpec::SpeciesSpec(std::string name, std::vector<std::pair<int, BigRat>> terms)
    : name_(std::move(name)) {
  int d = 0;
  for (auto& [i, c] : terms) {
    if (i < 1) throw std::invalid_argument("species terms start at degree 1");
    if (sgn(c) < 0) throw std::invalid_argument("species coefficients must be non-negative");
    d = std::max(d, i);
  }
  coeffs_.assign(d + 1, BigRat(0));
  for (auto& [i, c] : terms) coeffs_[i] += c;
  shapes_.assign(d + 1, 0);
  for (int i = 1; i <= d; ++i) {
    BigRat count = coeffs_[i] * BigRat(factorial(i));
    count.canonicalize();
    if (count.get_den() != 1) throw std::invalid_argument("i! s_i must be an integer");
    shapes_[i] = count.get_num().get_si();
  }
  if (d == 0 || sgn(coeffs_[d]) == 0) throw std::invalid_argument("empty species");
}

const BigRat& SpeciesSpec::coeff(int i) const {
  static const BigRat zero(0);
  return i >= 1 && i <= degree() ? coeffs_[i] : zero;
}

std::int64_t SpeciesSpec::shapes(int i) const { return i >= 1 && i <= degree() ? shapes_[i] : 0; }

double SpeciesSpec::eval(double z) const {
  double s = 0;
  for (int i = 1; i <= degree(); ++i) s += coeffs_[i].get_d() * std::pow(z, i);
  return s;
}

double SpeciesSpec::eval_derivative(double z) const {
  double s = 0;
  for (int i = 1; i <= degree(); ++i) s += i * coeffs_[i].get_d() * std::pow(z, i - 1);
  return s;
}

double SpeciesSpec::eval_second_derivative(double z) const {
  double s = 0;
  for (int i = 2; i <= degree(); ++i) s += i * (i - 1) * coeffs_[i].get_d() * std::pow(z, i - 2);
  return s;
}

SpeciesSpec involution_species() { return {"T2", {{1, 1}, {2, BigRat(1, 2)}}}; }
SpeciesSpec order3_species() { return {"T3", {{1, 1}, {2, 1}, {3, BigRat(1, 3)}}}; }
SpeciesSpec order3_permutation_species() { return {"T3fi", {{1, 1}, {3, BigRat(1, 3)}}}; }
SpeciesSpec loop_free_involution_species() { return {"T2_0", {{2, BigRat(1, 2)}}}; }
SpeciesSpec loop_free_order3_species() { return {"T3_0", {{2, 1}, {3, BigRat(1, 3)}}}; }
SpeciesSpec triangle_species() { return {"T3frfi", {{3, BigRat(1, 3)}}}; }

std::vector<BigInt> count_sequence(const SpeciesSpec& s, int max_n) {
  std::vector<BigInt> a(max_n + 1);
  a[0] = 1;
  int d = s.degree();
  for (int n = 1; n <= max_n; ++n) {
    BigInt total = 0;
    // C(n-1, i-1) built incrementally.
    BigInt choose = 1;
    for (int i = 1; i <= std::min(d, n); ++i) {
      if (i > 1) {
        choose *= n - i + 1;
        choose /= i - 1;
      }
      if (s.shapes(i) != 0) total += choose * s.shapes(i) * a[n - i];
    }
    a[n] = std::move(total);
  }
  return a;
}

CountTable::CountTable(SpeciesSpec s, int max_n) : spec(std::move(s)) {
  values = count_sequence(spec, max_n);
  approx.reserve(values.size());
  for (const auto& v : values) approx.push_back(scaled(v));
}

double saddle_point(const SpeciesSpec& s, double n) {
  int d = s.degree();
  double top = d * s.coeff(d).get_d();
  double lo = 0, hi = std::pow(n / top, 1.0 / d);
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid * s.eval_derivative(mid) < n)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double log_asymptotic_estimate(const SpeciesSpec& s, int n) {
  double c = saddle_point(s, n);
  double lambda = c * c * s.eval_second_derivative(c) + c * s.eval_derivative(c);
  return s.eval(c) - n * std::log(c) - 0.5 * std::log(2 * std::numbers::pi * lambda);
}

double expected_components(const SpeciesSpec& s, int t, double n) {
  int d = s.degree();
  double top = d * s.coeff(d).get_d();
  return s.coeff(t).get_d() * std::pow(top, -static_cast<double>(t) / d) *
         std::pow(n, static_cast<double>(t) / d);
}

BigRat exact_expected_components(const SpeciesSpec& s, int t, int n,
                                 const std::vector<BigInt>& counts) {
  if (t > n) return 0;
  BigRat r(falling(n, t) * counts[n - t], counts[n]);
  r.canonicalize();
  return r * s.coeff(t);
}

double rate_function(const SpeciesSpec& s, int t, double r) {
  int d = s.degree();
  double top = d * s.coeff(d).get_d();
  double c = s.coeff(t).get_d() * std::pow(top, -static_cast<double>(t) / d);
  return (r - 1) * c - (r > 0 ? r * std::log(r) : 0.0);
}

TailThresholds tail_thresholds(const SpeciesSpec& s, int t) {
  auto f = [&](double r) { return rate_function(s, t, r); };
  double slope = f(1.0 + 1e-7) / 1e-7;  // f'(1) = c - 1
  auto bisect = [&](double neg, double pos) {
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (neg + pos);
      (f(mid) < 0 ? neg : pos) = mid;
    }
    return 0.5 * (neg + pos);
  };
  if (std::abs(slope) < 1e-6) return {1.0, 1.0};
  if (slope < 0) return {bisect(1e-300, 1.0 - 1e-9), 1.0};
  double hi = 2.0;
  while (f(hi) >= 0) hi *= 2;
  return {1.0, bisect(hi, 1.0 + 1e-9)};
}

std::vector<BigRat> inverse_series(const std::vector<BigRat>& a, int count) {
  if (a.empty() || a[0] != 1) throw std::invalid_argument("series must start with 1");
  std::vector<BigRat> b(count);
  if (count > 0) b[0] = 1;
  for (int k = 1; k < count; ++k) {
    BigRat acc = 0;
    for (int j = 1; j <= k && j < static_cast<int>(a.size()); ++j) acc += a[j] * b[k - j];
    b[k] = -acc;
  }
  return b;
}

std::vector<BigInt> connected_transfer(const std::vector<BigInt>& totals) {
  int n_max = static_cast<int>(totals.size()) - 1;
  std::vector<BigInt> g(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = totals[n];
    BigInt choose = 1;  // C(n-1, m-1)
    for (int m = 1; m < n; ++m) {
      if (m > 1) {
        choose *= n - m + 1;
        choose /= m - 1;
      }
      acc -= choose * g[m] * totals[n - m];
    }
    g[n] = std::move(acc);
  }
  return g;
}

std::vector<BigInt> exponential_transfer(const std::vector<BigInt>& connected) {
  int n_max = static_cast<int>(connected.size()) - 1;
  std::vector<BigInt> t(n_max + 1, 0);
  if (n_max >= 0) t[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = connected[n];
    BigInt choose = 1;
    for (int m = 1; m < n; ++m) {
      if (m > 1) {
        choose *= n - m + 1;
        choose /= m - 1;
      }
      acc += choose * connected[m] * t[n - m];
    }
    t[n] = std::move(acc);
  }
  return t;
}

BivariateTable connected_transfer(const BivariateTable& totals) {
  int n_max = static_cast<int>(totals.size()) - 1;
  BivariateTable g(n_max + 1);
  for (int n = 1; n <= n_max; ++n) {
    g[n] = totals[n];
    BigInt choose = 1;
    for (int m = 1; m < n; ++m) {
      if (m > 1) {
        choose *= n - m + 1;
        choose /= m - 1;
      }
      const auto& gm = g[m];
      const auto& rest = totals[n - m];
      for (std::size_t k = 0; k < gm.size(); ++k) {
        if (sgn(gm[k]) == 0) continue;
        BigInt left = choose * gm[k];
        for (std::size_t j = 0; j < rest.size() && k + j < g[n].size(); ++j) {
          if (sgn(rest[j]) == 0) continue;
          g[n][k + j] -= left * rest[j];
        }
      }
    }
  }
  return g;
}

SetStructure sample_set(const CountTable& table, int n, Rng& rng) {
  if (n > table.max_size()) throw std::out_of_range("count table too small");
  if (sgn(table.values[n]) == 0) throw std::domain_error("no " + table.spec.name() + " structure of size " + std::to_string(n));
  const auto& s = table.spec;
  int d = s.degree();
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = i;
  SetStructure out;
  out.n = n;
  int pos = 0;
  while (pos < n) {
    int r = n - pos;
    int top = std::min(d, r);
    std::vector<double> cdf(top);
    double acc = 0, choose = 1;
    for (int i = 1; i <= top; ++i) {
      if (i > 1) choose = choose * (r - i + 1) / (i - 1);
      if (s.shapes(i) != 0)
        acc += choose * static_cast<double>(s.shapes(i)) *
               ratio(table.approx[r - i], table.approx[r]);
      cdf[i - 1] = acc;
    }
    auto exact = [&] {
      std::vector<BigInt> w(top);
      for (int i = 1; i <= top; ++i)
        w[i - 1] = binomial(r - 1, i - 1) * s.shapes(i) * table.values[r - i];
      return w;
    };
    int size = static_cast<int>(choose_weighted(cdf, exact, rng)) + 1;
    for (int j = 1; j < size; ++j) {
      auto k = pos + j + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - pos - j)));
      std::swap(labels[pos + j], labels[k]);
    }
    Component c;
    c.size = size;
    c.shape = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(s.shapes(size))));
    c.atoms.assign(labels.begin() + pos, labels.begin() + pos + size);
    out.components.push_back(std::move(c));
    pos += size;
  }
  return out;
}

std::vector<SetStructure> enumerate_sets(const SpeciesSpec& s, int n) {
  std::vector<SetStructure> out;
  SetStructure cur;
  cur.n = n;
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      out.push_back(cur);
      return;
    }
    std::vector<int> free_atoms;
    for (int v = first + 1; v < n; ++v)
      if (!used[v]) free_atoms.push_back(v);
    for (int size = 1; size <= std::min<int>(s.degree(), free_atoms.size() + 1); ++size) {
      if (s.shapes(size) == 0) continue;
      // Choose size-1 companions from free_atoms.
      std::vector<int> pick;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == size - 1) {
          std::vector<int> atoms{first};
          atoms.insert(atoms.end(), pick.begin(), pick.end());
          for (int v : atoms) used[v] = 1;
          for (std::int64_t shape = 0; shape < s.shapes(size); ++shape) {
            cur.components.push_back({size, shape, atoms});
            rec();
            cur.components.pop_back();
          }
          for (int v : atoms) used[v] = 0;
          return;
        }
        for (std::size_t i = from; i < free_atoms.size(); ++i) {
          pick.push_back(free_atoms[i]);
          choose(i + 1);
          pick.pop_back();
        }
      };
      choose(0);
    }
  };
  rec();
  return out;
}

}  // namespace psl2
