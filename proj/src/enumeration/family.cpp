#include "psl2/family.hpp"

namespace psl2 {

std::string to_string(Family f) {
  switch (f) {
    case Family::all: return "all";
    case Family::finite_index: return "finite_index";
    case Family::cr_free: return "cr_free";
    case Family::free: return "free";
    case Family::free_finite_index: return "free_finite_index";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view s) {
  if (s == "all") return Family::all;
  if (s == "fi" || s == "finite_index") return Family::finite_index;
  if (s == "crfree" || s == "cr_free") return Family::cr_free;
  if (s == "free") return Family::free;
  if (s == "frfi" || s == "free_finite_index") return Family::free_finite_index;
  return std::nullopt;
}

}  // namespace psl2
