#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace psl2 {

enum class Family { all, finite_index, cr_free, free, free_finite_index };

inline constexpr std::array<Family, 5> kFamilies{Family::all, Family::finite_index,
                                                 Family::cr_free, Family::free,
                                                 Family::free_finite_index};

// Column names: all, finite_index, cr_free, free, free_finite_index.
std::string to_string(Family f);
// Accepts the column names and the short forms fi, crfree, frfi.
std::optional<Family> parse_family(std::string_view s);

}  // namespace psl2
