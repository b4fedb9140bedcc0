#include "psl2/enumeration.hpp"

#include <stdexcept>

namespace psl2 {

BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (sgn(r) != 0) throw std::logic_error("count is not divisible as expected");
  return q;
}

namespace {

const BigInt& at(const BivariateTable& t, int n, int l) {
  static const BigInt zero(0);
  if (n < 0 || l < 0 || n >= static_cast<int>(t.size()) || l >= static_cast<int>(t[n].size()))
    return zero;
  return t[n][l];
}

std::vector<BigInt> row_sums(const BivariateTable& t) {
  std::vector<BigInt> out(t.size(), 0);
  for (std::size_t n = 0; n < t.size(); ++n)
    for (const auto& x : t[n]) out[n] += x;
  return out;
}

std::vector<BigInt> product(const std::vector<BigInt>& x, const std::vector<BigInt>& y) {
  std::vector<BigInt> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

// M(n) = Mt(n) - sum_{m=1}^{n-1} C(n, m) M(m) t(n - m).
std::vector<BigInt> moment_transfer(const std::vector<BigInt>& marked,
                                    const std::vector<BigInt>& totals) {
  int n_max = static_cast<int>(totals.size()) - 1;
  std::vector<BigInt> m(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    BigInt acc = marked[n];
    for (int k = 1; k < n; ++k) acc -= binomial(n, k) * m[k] * totals[n - k];
    m[n] = std::move(acc);
  }
  return m;
}

// H_n = g(n) / (n - 1)! for connected counts g.
std::vector<BigInt> rooted_from_connected(const std::vector<BigInt>& g) {
  std::vector<BigInt> out(g.size(), 0);
  for (std::size_t n = 1; n < g.size(); ++n) out[n] = exact_div(g[n], factorial(static_cast<long>(n) - 1));
  return out;
}

void finish_free(FreeTables& f, int max_n) {
  f.ga.assign(max_n + 1, 0);
  f.gb.assign(max_n + 1, 0);
  f.g1.assign(max_n + 1, 0);
  for (int n = 2; n <= max_n; ++n) {
    f.ga[n] = n * f.gv[n - 1];
    if (n >= 2) f.ga[n] += BigInt(2) * n * (n - 1) * f.ga[n - 2];
  }
  for (int n = 1; n <= max_n; ++n) {
    f.gb[n] = n * f.ga[n - 1];
    f.g1[n] = f.ga[n] + f.gb[n];
  }
}

}  // namespace

BivariateTable t2_table(int max_n) {
  BivariateTable t(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    t[n].assign(n + 1, 0);
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (int l = 0; l <= n; ++l) t[n][l] = at(t, n - 1, l - 1) + BigInt(n - 1) * at(t, n - 2, l);
  }
  return t;
}

BivariateTable t3_table(int max_n) {
  BivariateTable t(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    t[n].assign(n + 1, 0);
    if (n == 0) {
      t[0][0] = 1;
      continue;
    }
    for (int l = 0; l <= n; ++l)
      t[n][l] = at(t, n - 1, l - 1) + BigInt(2 * (n - 1)) * at(t, n - 2, l) +
                BigInt(n - 1) * (n - 2) * at(t, n - 3, l);
  }
  return t;
}

std::vector<BivariateTable> t3_trivariate(int max_n) {
  std::vector<BivariateTable> t(max_n + 1);
  auto get = [&](int n, int l, int k) -> BigInt {
    if (n < 0 || l < 0 || k < 0 || l > n || 2 * k > n) return 0;
    return t[n][l][k];
  };
  for (int n = 0; n <= max_n; ++n) {
    t[n].assign(n + 1, std::vector<BigInt>(n / 2 + 1, 0));
    if (n == 0) {
      t[0][0][0] = 1;
      continue;
    }
    for (int l = 0; l <= n; ++l)
      for (int k = 0; 2 * k <= n; ++k)
        t[n][l][k] = get(n - 1, l - 1, k) + BigInt(2 * (n - 1)) * get(n - 2, l, k - 1) +
                     BigInt(n - 1) * (n - 2) * get(n - 3, l, k);
  }
  return t;
}

BivariateTable gpr_tilde_table(int max_n) {
  auto a = t2_table(max_n);
  auto b = t3_table(max_n);
  BivariateTable g(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    g[n].assign(2 * n + 1, 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) g[n][i + j] += a[n][i] * b[n][j];
  }
  return g;
}

BivariateTable gpr_table(int max_n) { return connected_transfer(gpr_tilde_table(max_n)); }

LoopMoments loop_moment_tables(int max_n) {
  auto t2 = count_sequence(involution_species(), max_n);
  auto t3 = count_sequence(order3_species(), max_n);
  LoopMoments m;
  m.totals = product(t2, t3);
  m.connected = connected_transfer(m.totals);
  std::vector<BigInt> marked(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) marked[n] = n * (t2[n - 1] * t3[n] + t2[n] * t3[n - 1]);
  m.moment = moment_transfer(marked, m.totals);
  m.rooted.assign(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) m.rooted[n] = n * m.connected[n] + m.moment[n];
  if (max_n >= 1) m.rooted[1] += 1;
  return m;
}

BigRat connectivity_probability(const LoopMoments& m, int n) {
  BigRat p(m.connected.at(n), m.totals.at(n));
  p.canonicalize();
  return p;
}

std::vector<BigInt> count_all(int max_n) {
  auto g = gpr_table(max_n);
  std::vector<BigInt> out(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    BigInt l_n = 0;
    for (std::size_t l = 0; l < g[n].size(); ++l) l_n += (n + static_cast<long>(l)) * g[n][l];
    if (n == 1) l_n += 1;
    out[n] = exact_div(l_n, factorial(n));
  }
  return out;
}

std::vector<BigInt> count_all_univariate(int max_n) {
  auto m = loop_moment_tables(max_n);
  std::vector<BigInt> out(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) out[n] = exact_div(m.rooted[n], factorial(n));
  return out;
}

std::vector<BigInt> count_finite_index(int max_n) {
  auto t2 = count_sequence(involution_species(), max_n);
  auto t3 = count_sequence(order3_permutation_species(), max_n);
  return rooted_from_connected(connected_transfer(product(t2, t3)));
}

FreeTables free_tables(int max_n) {
  FreeTables f;
  f.t2_0 = count_sequence(loop_free_involution_species(), max_n);
  f.t3_0.assign(max_n + 1, {});
  for (int n = 0; n <= max_n; ++n) {
    f.t3_0[n].assign(n / 2 + 1, 0);
    if (n == 0) {
      f.t3_0[0][0] = 1;
      continue;
    }
    for (int k = 0; 2 * k <= n; ++k)
      f.t3_0[n][k] = BigInt(2 * (n - 1)) * at(f.t3_0, n - 2, k - 1) +
                     BigInt(n - 1) * (n - 2) * at(f.t3_0, n - 3, k);
  }
  f.g0_tilde.assign(max_n + 1, {});
  for (int n = 0; n <= max_n; ++n) {
    f.g0_tilde[n] = f.t3_0[n];
    for (auto& x : f.g0_tilde[n]) x *= f.t2_0[n];
  }
  f.g0 = connected_transfer(f.g0_tilde);
  f.g0_total = row_sums(f.g0);
  f.gv.assign(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n)
    for (std::size_t k = 0; k < f.g0[n].size(); ++k) f.gv[n] += static_cast<long>(k) * f.g0[n][k];
  finish_free(f, max_n);
  return f;
}

FreeTables free_tables_univariate(int max_n) {
  FreeTables f;
  f.t2_0 = count_sequence(loop_free_involution_species(), max_n);
  auto t3_0 = count_sequence(loop_free_order3_species(), max_n);
  auto totals = product(f.t2_0, t3_0);
  f.g0_total = connected_transfer(totals);
  std::vector<BigInt> marked(max_n + 1, 0);
  for (int n = 2; n <= max_n; ++n) marked[n] = f.t2_0[n] * n * (n - 1) * t3_0[n - 2];
  f.gv = moment_transfer(marked, totals);
  finish_free(f, max_n);
  return f;
}

std::vector<BigInt> count_cr_free(int max_n) {
  auto f = free_tables(max_n);
  return rooted_from_connected(f.g0_total);
}

std::vector<BigInt> count_free(int max_n) {
  auto f = free_tables(max_n);
  std::vector<BigInt> out(max_n + 1, 0);
  for (int n = 1; n <= max_n; ++n) {
    BigInt ones = f.ga[n] + n * f.ga[n - 1];
    out[n] = exact_div(f.g0_total[n], factorial(n - 1)) + exact_div(ones, factorial(n));
  }
  return out;
}

std::vector<BigInt> count_free_finite_index(int max_n) {
  auto t2 = count_sequence(loop_free_involution_species(), max_n);
  auto t3 = count_sequence(triangle_species(), max_n);
  return rooted_from_connected(connected_transfer(product(t2, t3)));
}

}  // namespace psl2
