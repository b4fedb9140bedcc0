#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "psl2/family.hpp"
#include "psl2/stallings.hpp"
#include "psl2/words.hpp"

namespace psl2 {

// Exhaustive enumeration of all (a-structure, b-structure) pairs on n labelled vertices.
// Counts are independent of the recurrences: subgroup counts come from deduplicating
// canonical forms of every rooted graph.
struct BruteCounts {
  int n = 0;
  std::vector<std::int64_t> gpr;          // connected pairs by loop count, l = 0..2n
  std::int64_t labelled_rooted = 0;       // sum over connected pairs of (n + l)
  std::array<std::int64_t, 5> subgroups{};  // indexed by Family
  std::set<CombinatorialType> types;      // types of connected pairs

  std::int64_t count(Family f) const { return subgroups[static_cast<int>(f)]; }
};

// Throws std::length_error for n > kMaxBruteSize.
inline constexpr int kMaxBruteSize = 8;
BruteCounts brute_counts(int n);

// Canonical forms of all size-n subgroups in a family.
std::set<std::string> brute_subgroup_classes(int n, Family f);

// Shortlex normal forms of length <= max_len that label loops at the root.
std::set<Word> enumerate_loop_words(const StallingsGraph& g, int max_len);

// Involutions of [n] as partner arrays, and b-structures as successor arrays (kNone when
// undefined), generated directly rather than through the species machinery.
std::vector<std::vector<int>> all_involutions(int n);
std::vector<std::vector<int>> all_b_structures(int n);

}  // namespace psl2
