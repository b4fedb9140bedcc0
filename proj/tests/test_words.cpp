#include <doctest.h>

#include <random>

#include "psl2/words.hpp"

using namespace psl2;

namespace {

std::string nf(const char* s) { return normalize_shortlex(Word::parse(s)).to_string(); }

Word random_word(std::mt19937& gen, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 3);
  std::vector<Letter> out(len(gen));
  for (auto& x : out) x = static_cast<Letter>(letter(gen));
  return Word(out);
}

bool is_geodesic_shape(const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == Letter::A) return false;
    if (i > 0) {
      bool prev_b = w[i - 1] != Letter::a;
      bool cur_b = w[i] != Letter::a;
      if (prev_b == cur_b) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("parsing accepts letters and inverse exponents") {
  CHECK(Word::parse("a^-1 b a a b^-1").to_string() == "AbaaB");
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("1").empty());
  CHECK_THROWS_AS(Word::parse("abc"), WordParseError);
  CHECK_THROWS_AS(Word::parse("a^2"), WordParseError);
  CHECK_THROWS_AS(Word::parse("A^-1"), WordParseError);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(Word::parse("aA")).empty());
  CHECK(free_reduce(Word::parse("baAb")).to_string() == "bb");
  CHECK(free_reduce(Word::parse("abBAb")).to_string() == "b");
  CHECK(free_reduce(Word::parse("abab")).to_string() == "abab");
}

TEST_CASE("shortlex normal form") {
  CHECK(nf("aa") == "");
  CHECK(nf("bb") == "B");
  CHECK(nf("BB") == "b");
  CHECK(nf("bbb") == "");
  CHECK(nf("A") == "a");
  CHECK(nf("AbaaB") == "a");
  CHECK(nf("a^-1 b a a b^-1") == "a");
  CHECK(nf("abab") == "abab");
  CHECK_FALSE(equal_in_group(Word::parse("ab"), Word::parse("ba")));
  CHECK(equal_in_group(Word::parse("ababab"), Word::parse("")) == false);
}

TEST_CASE("normal form is idempotent, geodesic and a homomorphism") {
  std::mt19937 gen(7);
  for (int i = 0; i < 2000; ++i) {
    auto u = random_word(gen, 20), v = random_word(gen, 20);
    auto nu = normalize_shortlex(u);
    CHECK(normalize_shortlex(nu) == nu);
    CHECK(is_geodesic_shape(nu));
    CHECK(nu.size() <= u.size());
    CHECK(normalize_shortlex(u * v) == normalize_shortlex(nu * normalize_shortlex(v)));
    CHECK(normalize_shortlex(u * u.inverse()).empty());
    CHECK(free_reduce(free_reduce(u)) == free_reduce(u));
  }
}

TEST_CASE("generator lists") {
  auto gens = parse_generators("abaB, babab");
  REQUIRE(gens.size() == 2);
  CHECK(gens[0].to_string() == "abaB");
  CHECK(gens[1].to_string() == "babab");
  CHECK(parse_generators("").empty());
}
