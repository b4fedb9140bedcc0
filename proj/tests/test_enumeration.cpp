#include <doctest.h>

#include "psl2/enumeration.hpp"
#include "reference_tables.hpp"

using namespace psl2;

namespace {

BigInt big(const char* s) { return BigInt(s); }

std::vector<BigInt> col(const BivariateTable& t, int n) {
  return n < static_cast<int>(t.size()) ? t[n] : std::vector<BigInt>{};
}

void check_row(const std::vector<BigInt>& got, const std::vector<std::int64_t>& want) {
  for (std::size_t l = 0; l < want.size(); ++l) {
    BigInt g = l < got.size() ? got[l] : BigInt(0);
    CHECK(g == BigInt(static_cast<long>(want[l])));
  }
  for (std::size_t l = want.size(); l < got.size(); ++l) CHECK(got[l] == 0);
}

}  // namespace

TEST_CASE("loop-marked tables match the appendix") {
  auto t2 = t2_table(6);
  auto t3 = t3_table(6);
  auto gt = gpr_tilde_table(6);
  auto g = gpr_table(6);
  for (int n = 2; n <= 6; ++n) {
    check_row(col(t2, n), reference::t2_rows()[n - 2]);
    check_row(col(t3, n), reference::t3_rows()[n - 2]);
  }
  for (int n = 1; n <= 6; ++n) {
    check_row(col(gt, n), reference::gpr_tilde_rows()[n - 1]);
    check_row(col(g, n), reference::gpr_rows()[n - 1]);
  }
}

TEST_CASE("trivariate table marginalises to t3") {
  auto tri = t3_trivariate(8);
  auto t3 = t3_table(8);
  for (int n = 0; n <= 8; ++n)
    for (int l = 0; l <= n; ++l) {
      BigInt s = 0;
      for (const auto& v : tri[n][l]) s += v;
      CHECK(s == t3[n][l]);
    }
}

TEST_CASE("counts match the published table") {
  auto all = count_all(36);
  auto fi = count_finite_index(36);
  auto crf = count_cr_free(36);
  auto fr = count_free(36);
  auto frfi = count_free_finite_index(36);
  for (const auto& row : reference::count_figure()) {
    INFO("n = " << row.n);
    CHECK(all[row.n] == big(row.all));
    CHECK(fi[row.n] == big(row.finite_index));
    CHECK(crf[row.n] == big(row.cr_free));
    CHECK(fr[row.n] == big(row.free));
    CHECK(frfi[row.n] == big(row.free_finite_index));
  }
}

TEST_CASE("finite index counts match OEIS A005133") {
  auto fi = count_finite_index(36);
  for (int n = 1; n <= 36; ++n) CHECK(fi[n] == BigInt(static_cast<long>(reference::oeis_a005133()[n - 1])));
}

TEST_CASE("free finite index counts match OEIS A062980") {
  auto frfi = count_free_finite_index(36);
  for (int k = 1; k <= 6; ++k) CHECK(frfi[6 * k] == BigInt(static_cast<long>(reference::oeis_a062980()[k - 1])));
  for (int n = 1; n <= 36; ++n)
    if (n % 6) CHECK(frfi[n] == 0);
}

TEST_CASE("univariate route agrees with the bivariate route") {
  CHECK(count_all(150) == count_all_univariate(150));
  auto m = loop_moment_tables(6);
  CHECK(m.moment[6] == 29520);
  auto g = gpr_table(40);
  auto mm = loop_moment_tables(40);
  for (int n = 1; n <= 40; ++n) {
    BigInt c = 0, mo = 0;
    for (std::size_t l = 0; l < g[n].size(); ++l) {
      c += g[n][l];
      mo += static_cast<long>(l) * g[n][l];
    }
    CHECK(c == mm.connected[n]);
    CHECK(mo == mm.moment[n]);
  }
}

TEST_CASE("free tables") {
  auto ft = free_tables(40);
  auto fu = free_tables_univariate(40);
  for (int k = 0; k <= 6; ++k) {
    int n = 2 * k;
    CHECK(ft.t2_0[n] == BigInt(static_cast<long>(reference::t2_0_even()[k])));
    BigInt t3 = 0, gt = 0;
    for (const auto& v : ft.t3_0[n]) t3 += v;
    for (const auto& v : ft.g0_tilde[n]) gt += v;
    CHECK(t3 == BigInt(static_cast<long>(reference::t3_0_even()[k])));
    // The empty pair counts once in the product table; the reference lists 0 at n = 0.
    if (n > 0) CHECK(gt == BigInt(static_cast<long>(reference::g0_tilde_even()[k])));
    CHECK(ft.g0_total[n] == BigInt(static_cast<long>(reference::g0_even()[k])));
  }
  for (int n = 1; n <= 40; ++n) {
    CHECK(ft.g0_total[n] == fu.g0_total[n]);
    CHECK(ft.gv[n] == fu.gv[n]);
    CHECK(ft.g1[n] == fu.g1[n]);
    CHECK(ft.g1[n] == ft.ga[n] + ft.gb[n]);
  }
}

TEST_CASE("connectivity probabilities") {
  auto m = loop_moment_tables(6);
  CHECK(connectivity_probability(m, 1) == 1);
  CHECK(connectivity_probability(m, 2) == BigRat(5, 6));
  BigRat p6(15120, 49476);
  p6.canonicalize();
  CHECK(connectivity_probability(m, 6) == p6);
}

TEST_CASE("mean number of a-loops") {
  auto t2 = t2_table(500);
  auto total = count_sequence(involution_species(), 500);
  for (int n = 1; n <= 500; ++n) {
    BigInt m = 0;
    for (std::size_t l = 0; l < t2[n].size(); ++l) m += static_cast<long>(l) * t2[n][l];
    CHECK(m == n * total[n - 1]);
  }
}

TEST_CASE("exact_div") {
  CHECK(exact_div(BigInt(12), BigInt(4)) == 3);
  CHECK_THROWS_AS(exact_div(BigInt(13), BigInt(4)), std::logic_error);
}
