#include "psl2/words.hpp"

#include <cctype>

namespace psl2 {

Letter inverse(Letter x) {
  switch (x) {
    case Letter::a: return Letter::A;
    case Letter::A: return Letter::a;
    case Letter::b: return Letter::B;
    case Letter::B: return Letter::b;
  }
  return x;
}

char to_char(Letter x) {
  switch (x) {
    case Letter::a: return 'a';
    case Letter::A: return 'A';
    case Letter::b: return 'b';
    case Letter::B: return 'B';
  }
  return '?';
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && text.size() - i == 1 && out.empty()) break;
    Letter x;
    switch (c) {
      case 'a': x = Letter::a; break;
      case 'A': x = Letter::A; break;
      case 'b': x = Letter::b; break;
      case 'B': x = Letter::B; break;
      default:
        throw WordParseError("unexpected character '" + std::string(1, c) + "' at offset " +
                             std::to_string(i));
    }
    ++i;
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1" || x == Letter::A || x == Letter::B)
        throw WordParseError("only ^-1 exponents on a or b are accepted, at offset " +
                             std::to_string(i));
      x = psl2::inverse(x);
      i += 3;
    }
    out.push_back(x);
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& x : out) x = psl2::inverse(x);
  return Word(std::move(out));
}

Word Word::operator*(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (auto x : letters_) s.push_back(to_char(x));
  return s;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> st;
  for (auto x : w.letters()) {
    if (!st.empty() && st.back() == inverse(x))
      st.pop_back();
    else
      st.push_back(x);
  }
  return Word(std::move(st));
}

Word normalize_shortlex(const Word& w) {
  // Stack of syllables (generator, exponent) in Z/2 * Z/3.
  struct Syllable {
    bool is_b;
    int exp;
  };
  std::vector<Syllable> st;
  for (auto x : w.letters()) {
    bool is_b = x == Letter::b || x == Letter::B;
    int e = is_b ? (x == Letter::b ? 1 : 2) : 1;
    if (!st.empty() && st.back().is_b == is_b) {
      int order = is_b ? 3 : 2;
      st.back().exp = (st.back().exp + e) % order;
      if (st.back().exp == 0) st.pop_back();
    } else {
      st.push_back({is_b, e});
    }
  }
  std::vector<Letter> out;
  out.reserve(st.size());
  for (auto s : st) out.push_back(!s.is_b ? Letter::a : (s.exp == 1 ? Letter::b : Letter::B));
  return Word(std::move(out));
}

bool equal_in_group(const Word& u, const Word& v) {
  return normalize_shortlex(u) == normalize_shortlex(v);
}

std::vector<Word> parse_generators(std::string_view text) {
  std::vector<Word> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - start);
    bool blank = true;
    for (char c : piece)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (!blank) gens.push_back(Word::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return gens;
}

}  // namespace psl2
