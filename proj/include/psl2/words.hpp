#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace psl2 {

// Letters over the generators a (order 2) and b (order 3). A and B denote inverses.
enum class Letter : unsigned char { a, A, b, B };

Letter inverse(Letter x);
char to_char(Letter x);

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  // Accepts a, A, b, B, "a^-1", "b^-1"; whitespace is ignored. "1" or "" is the empty word.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& other) const;
  std::string to_string() const;

  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

// Cancels adjacent xX pairs until none remain.
Word free_reduce(const Word& w);

// Unique shortlex geodesic: alternates a with b or B, and never uses A.
Word normalize_shortlex(const Word& w);

bool equal_in_group(const Word& u, const Word& v);

// Splits a comma separated generator list.
std::vector<Word> parse_generators(std::string_view text);

}  // namespace psl2
