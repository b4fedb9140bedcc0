#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "psl2/stallings.hpp"
#include "psl2/words.hpp"

namespace psl2 {

// H is isomorphic to (Z/2)^{*l2} * (Z/3)^{*l3} * F_r.
struct IsomorphismType {
  int l2 = 0;
  int l3 = 0;
  int r = 0;
  auto operator<=>(const IsomorphismType&) const = default;
};

// Index of the subgroup described by a rooted graph; nullopt when infinite.
std::optional<std::int64_t> subgroup_index(const StallingsGraph& g);
bool is_finite_index(const StallingsGraph& g);

IsomorphismType isomorphism_type(const StallingsGraph& g);
bool is_free(const StallingsGraph& g);

struct Basis {
  std::vector<Word> order2;  // conjugates of a
  std::vector<Word> order3;  // conjugates of b
  std::vector<Word> free_from_a;
  std::vector<Word> free_from_b;

  std::vector<Word> all() const;
  int free_rank() const { return static_cast<int>(free_from_a.size() + free_from_b.size()); }
};

// Generating set adapted to the free product decomposition, from a spanning tree that
// contains two edges of every b-triangle.
Basis basis(const StallingsGraph& g);

bool is_realizable(const CombinatorialType& t);

// A proper cyclically reduced graph of the given type. Throws std::invalid_argument when
// the type is not realizable.
StallingsGraph realize_type(const CombinatorialType& t);

}  // namespace psl2
