#include <doctest.h>

#include <cmath>

#include "psl2/asymptotics.hpp"
#include "psl2/enumeration.hpp"

using namespace psl2;

namespace {

double ratio(const std::vector<std::optional<double>>& exact, AsymptoticFamily f, int n) {
  return std::exp(*exact[n] - *log_asymptotic(f, n));
}

}  // namespace

TEST_CASE("family names round trip") {
  for (auto f : {AsymptoticFamily::t2, AsymptoticFamily::t3, AsymptoticFamily::t3_fi, AsymptoticFamily::t2_0,
                 AsymptoticFamily::t3_0, AsymptoticFamily::g_tilde, AsymptoticFamily::g, AsymptoticFamily::h_fi,
                 AsymptoticFamily::g0_tilde, AsymptoticFamily::g0, AsymptoticFamily::h_fr_fi})
    CHECK(parse_asymptotic_family(to_string(f)) == f);
  CHECK_FALSE(parse_asymptotic_family("nope"));
}

TEST_CASE("invalid sizes have no estimate") {
  CHECK_FALSE(log_asymptotic(AsymptoticFamily::h_fr_fi, 10));
  CHECK(log_asymptotic(AsymptoticFamily::h_fr_fi, 12));
  CHECK_FALSE(log_asymptotic(AsymptoticFamily::t2_0, 7));
  CHECK_FALSE(log_asymptotic(AsymptoticFamily::g0, 9));
}

TEST_CASE("structure ratios converge") {
  for (auto f : {AsymptoticFamily::t2, AsymptoticFamily::t3, AsymptoticFamily::t3_fi, AsymptoticFamily::t2_0,
                 AsymptoticFamily::t3_0}) {
    INFO(to_string(f));
    auto exact = log_exact(f, 1000);
    double r500 = ratio(exact, f, 500), r1000 = ratio(exact, f, 1000);
    CHECK(r500 > 0.8);
    CHECK(r500 < 1.25);
    CHECK(std::abs(r1000 - 1) < std::abs(r500 - 1));
  }
}

TEST_CASE("pair ratios converge") {
  for (auto f : {AsymptoticFamily::g_tilde, AsymptoticFamily::g0_tilde}) {
    INFO(to_string(f));
    auto exact = log_exact(f, 1000);
    double r400 = ratio(exact, f, 400), r1000 = ratio(exact, f, 1000);
    CHECK(std::abs(r400 - 1) < 0.1);
    CHECK(std::abs(r1000 - 1) < std::abs(r400 - 1));
  }
}

TEST_CASE("connected ratios approach 1 from below") {
  // The connected part differs from the pair count by the connectivity probability, which
  // tends to 1 only like 1 - c n^{-1/6}.
  for (auto f : {AsymptoticFamily::g, AsymptoticFamily::h_fi, AsymptoticFamily::g0}) {
    INFO(to_string(f));
    auto exact = log_exact(f, 800);
    double prev = 0;
    for (int n : {100, 200, 400, 800}) {
      double r = ratio(exact, f, n);
      CHECK(r > prev);
      CHECK(r < 1);
      prev = r;
    }
  }
  auto exact = log_exact(AsymptoticFamily::h_fr_fi, 600);
  double prev = 1e9;
  for (int n : {60, 180, 600}) {
    double gap = std::abs(ratio(exact, AsymptoticFamily::h_fr_fi, n) - 1);
    CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("subgroup counts and the size bounds") {
  auto all = count_all_univariate(400);
  auto m = loop_moment_tables(400);
  double prev = 0;
  for (int n = 10; n <= 400; n += 10) {
    // Exact form: n g_n / n! < H_n < 2 n g_n / n!.
    BigRat h(all[n]), v(BigInt(n) * m.connected[n], factorial(n));
    v.canonicalize();
    CHECK(v < h);
    CHECK(h < 2 * v);
    // The estimated bounds inherit the slow connectivity convergence: H_n / V_n rises.
    double r = std::exp(log_big(all[n]) - h_bounds(n).lower);
    if (n >= 50) CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("expected types") {
  auto e = expected_type(Family::all, 1000);
  CHECK(e.l2 == doctest::Approx(std::sqrt(1000.0)));
  CHECK(e.l3 == doctest::Approx(10.0));
  CHECK(e.k3 == doctest::Approx(100.0));
  CHECK(e.r == doctest::Approx(1000.0 / 6 - 100.0 / 3));
  CHECK(expected_type(Family::finite_index, 100).r == doctest::Approx(100.0 / 6 - 5));
  auto fr = expected_type(Family::free, 1000);
  CHECK(fr.l2 == 0);
  CHECK(fr.r == doctest::Approx((1000.0 - 100.0) / 6));
}

TEST_CASE("deviation exponents") {
  auto d = deviation_exponent(Family::all, Statistic::l2, Side::lower, 0.5, 400);
  CHECK(d.rate == doctest::Approx(-0.5 + 0.5 * std::log(2.0)));
  CHECK(d.scale == doctest::Approx(20.0));
  CHECK(d.log_bound == doctest::Approx(d.rate * 20));
  auto near = deviation_exponent(Family::all, Statistic::l2, Side::upper, 1.0001, 400);
  CHECK(std::exp(near.rate) == doctest::Approx(1.0));
  CHECK(deviation_exponent(Family::all, Statistic::k3, Side::upper, 1.5, 1000).scale ==
        doctest::Approx(100.0));
  CHECK_THROWS_AS(deviation_exponent(Family::all, Statistic::l2, Side::lower, 1.5, 100), std::invalid_argument);
  CHECK_THROWS_AS(deviation_exponent(Family::all, Statistic::l2, Side::upper, 0.5, 100), std::invalid_argument);
  CHECK_THROWS_AS(deviation_exponent(Family::free, Statistic::l2, Side::upper, 1.5, 100), std::invalid_argument);
}

TEST_CASE("Bender residuals approach the inverse-series coefficients") {
  auto m = loop_moment_tables(1000);
  // 1/Gt starts 1 - z - 2 z^2 + ...; the normalised residuals drift toward b_1 and b_2.
  double gap1 = 1e9, gap2 = 1e9;
  for (int n : {100, 200, 400, 1000}) {
    double g1 = std::abs(bender_residual(m.totals, m.connected, n, 1) + 1);
    double g2 = std::abs(bender_residual(m.totals, m.connected, n, 2) + 2);
    CHECK(g1 < gap1);
    CHECK(g2 < gap2);
    gap1 = g1;
    gap2 = g2;
  }
  CHECK_THROWS(bender_residual(m.totals, m.connected, 1001, 1));
}

TEST_CASE("probability reports") {
  auto rows = probability_reports(60);
  REQUIRE(rows.size() == 60);
  CHECK(rows[0].fi_fraction == doctest::Approx(0.25));
  for (const auto& r : rows) {
    CHECK(r.fi_fraction > 0);
    CHECK(r.fi_fraction <= 1);
    CHECK(r.non_cr_free_share >= 0);
    CHECK(r.non_cr_free_share <= 1);
  }
  CHECK(rows[2].non_cr_free_share == 1);  // n = 3: the unique free subgroup is not cyclically reduced
}
