#include <doctest.h>

#include "psl2/enumeration.hpp"
#include "psl2/oracle.hpp"
#include "psl2/subgroup_props.hpp"

using namespace psl2;

TEST_CASE("structure generators") {
  CHECK(all_involutions(6).size() == 76);
  CHECK(all_b_structures(6).size() == 651);
}

TEST_CASE("brute force agrees with recurrences for n <= 7") {
  auto g = gpr_table(7);
  auto m = loop_moment_tables(7);
  std::vector<std::vector<BigInt>> counts = {count_all(7), count_finite_index(7), count_cr_free(7),
                                             count_free(7), count_free_finite_index(7)};
  for (int n = 1; n <= 7; ++n) {
    INFO("n = " << n);
    auto b = brute_counts(n);
    for (int l = 0; l <= 2 * n; ++l) {
      BigInt want = l < static_cast<int>(g[n].size()) ? g[n][l] : BigInt(0);
      CHECK(BigInt(static_cast<long>(b.gpr[l])) == want);
    }
    // Labelled rooted count, trivial subgroup included at n = 1.
    CHECK(BigInt(static_cast<long>(b.labelled_rooted)) == m.rooted[n]);
    for (Family f : kFamilies) {
      INFO(to_string(f));
      CHECK(BigInt(static_cast<long>(b.count(f))) == counts[static_cast<int>(f)][n]);
    }
  }
}

TEST_CASE("subgroup classes are consistent with properties") {
  for (int n = 1; n <= 5; ++n) {
    auto all = brute_subgroup_classes(n, Family::all);
    auto fi = brute_subgroup_classes(n, Family::finite_index);
    auto fr = brute_subgroup_classes(n, Family::free);
    for (const auto& k : fi) CHECK(all.count(k) == 1);
    for (const auto& k : fr) CHECK(all.count(k) == 1);
  }
}

TEST_CASE("sizes outside the brute force range are rejected") {
  CHECK_THROWS_AS(brute_counts(9), std::length_error);
  CHECK_THROWS_AS(brute_counts(0), std::length_error);
  CHECK(brute_subgroup_classes(1, Family::all).size() == 4);
}

namespace {

std::set<Word> loop_words_by_membership(const StallingsGraph& g, int max_len) {
  std::set<Word> out;
  std::vector<Word> layer{Word()};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer) {
      auto nf = normalize_shortlex(w);
      if (static_cast<int>(nf.size()) <= max_len && member(g, nf)) out.insert(nf);
      if (len < max_len)
        for (Letter x : {Letter::a, Letter::A, Letter::b, Letter::B}) {
          auto l = w.letters();
          l.push_back(x);
          next.emplace_back(std::move(l));
        }
    }
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("loop words agree with membership") {
  auto h1 = stallings_graph(parse_generators("abaB,babab"));
  auto h2 = stallings_graph(parse_generators("babaB,BabaBab"));
  auto trivial = stallings_graph({});
  auto a = stallings_graph(parse_generators("a"));
  CHECK(enumerate_loop_words(a, 1) == std::set<Word>{Word(), Word::parse("a")});
  CHECK(enumerate_loop_words(trivial, 6) == std::set<Word>{Word()});
  for (const auto& g : {h1, h2, a, trivial}) CHECK(enumerate_loop_words(g, 7) == loop_words_by_membership(g, 7));
  auto words = enumerate_loop_words(h1, 4);
  CHECK(words.count(normalize_shortlex(Word::parse("abaB"))) == 1);
  for (const auto& w : words) CHECK(normalize_shortlex(w) == w);
}
