#pragma once

#include <vector>

#include "psl2/bigint.hpp"
#include "psl2/species.hpp"

namespace psl2 {

// t2(n, l): involutions of [n] with l fixed points; rows n = 0..max_n, columns l = 0..n.
BivariateTable t2_table(int max_n);
// t3(n, l): b-structures on [n] with l loops.
BivariateTable t3_table(int max_n);
// t3(n, l, k): b-structures with l loops and k isolated edges.
std::vector<BivariateTable> t3_trivariate(int max_n);

// g~pr(n, l) = sum_i t2(n, i) t3(n, l - i); columns l = 0..2n.
BivariateTable gpr_tilde_table(int max_n);
// Connected part: proper cyclically reduced graphs with l loops.
BivariateTable gpr_table(int max_n);

// Univariate route through first moments in the loop marker.
struct LoopMoments {
  std::vector<BigInt> totals;     // sum_l g~pr(n, l) = t2(n) t3(n)
  std::vector<BigInt> connected;  // sum_l gpr(n, l)
  std::vector<BigInt> moment;     // sum_l l gpr(n, l)
  std::vector<BigInt> rooted;     // L_n = sum_l (n + l) gpr(n, l), plus the trivial subgroup at n = 1
};
LoopMoments loop_moment_tables(int max_n);

// Probability that a uniform pair of structures of size n is connected.
BigRat connectivity_probability(const LoopMoments& m, int n);

// H_n for n = 0..max_n (entry 0 is 0). count_all uses the bivariate tables.
std::vector<BigInt> count_all(int max_n);
std::vector<BigInt> count_all_univariate(int max_n);
std::vector<BigInt> count_finite_index(int max_n);
std::vector<BigInt> count_cr_free(int max_n);
std::vector<BigInt> count_free(int max_n);
std::vector<BigInt> count_free_finite_index(int max_n);

// Loop-free (free) family. g0 is indexed [n][k] with k the number of isolated b-edges.
struct FreeTables {
  std::vector<BigInt> t2_0;
  BivariateTable t3_0;
  BivariateTable g0_tilde;
  BivariateTable g0;
  std::vector<BigInt> g0_total;  // sum_k g0(n, k)
  std::vector<BigInt> gv;        // sum_k k g0(n, k)
  std::vector<BigInt> ga;        // one a-loop
  std::vector<BigInt> gb;        // one b-loop
  std::vector<BigInt> g1;        // ga + gb
};
FreeTables free_tables(int max_n);

// Same univariate sequences without the bivariate table: g0_total and gv by the moment
// route, then ga, gb, g1. Bivariate fields stay empty.
FreeTables free_tables_univariate(int max_n);

// Divides exactly, throwing std::logic_error on a remainder.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace psl2
