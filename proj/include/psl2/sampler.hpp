#pragma once

#include <cstdint>
#include <memory>
#include <mutex>

#include "psl2/enumeration.hpp"
#include "psl2/family.hpp"
#include "psl2/rng.hpp"
#include "psl2/species.hpp"
#include "psl2/stallings.hpp"

namespace psl2 {

struct RejectionStats {
  std::int64_t attempts = 0;            // pairs of structures drawn
  std::int64_t disconnected = 0;        // rejected because the union graph is disconnected
  std::int64_t root_rejections = 0;     // rejected while choosing a root or loop to delete
  std::int64_t weight_rejections = 0;   // rejected while weighting cores by isolated b-edges
};

// Count tables for the samplers, built on first use (thread-safe) up to max_n.
class SamplerTables {
 public:
  explicit SamplerTables(int max_n);
  int max_size() const { return max_n_; }

  const CountTable& t2() const;
  const CountTable& t3() const;
  const CountTable& t3_fi() const;
  const CountTable& t2_loop_free() const;
  const CountTable& t3_loop_free() const;
  const CountTable& t3_triangles() const;
  const FreeTables& free() const;

  // Builds every table a family needs, so later calls do not block.
  void prepare(Family f) const;

 private:
  const CountTable& lazy(int slot, SpeciesSpec (*make)()) const;

  int max_n_;
  mutable std::array<std::once_flag, 6> flags_;
  mutable std::array<std::unique_ptr<CountTable>, 6> tables_;
  mutable std::once_flag free_flag_;
  mutable std::unique_ptr<FreeTables> free_;
};

// Labelled graph from an a-structure (sizes 1, 2) and a b-structure (sizes 1, 2, 3).
StallingsGraph graph_from_structures(const SetStructure& a, const SetStructure& b);

// Uniform labelled cyclically reduced graph of size n, by rejection on connectivity.
// all: proper graphs; finite_index: no isolated b-edges; cr_free and free: loop-free;
// free_finite_index: loop-free without isolated b-edges. Throws std::domain_error when
// no such graph exists.
StallingsGraph sample_cyclically_reduced(const SamplerTables& t, int n, Family f, Rng& rng,
                                         RejectionStats* stats = nullptr);

// Uniform size-n subgroup of the family, returned as a rooted graph with root 0.
StallingsGraph sample_subgroup(const SamplerTables& t, int n, Family f, Rng& rng,
                               RejectionStats* stats = nullptr);

}  // namespace psl2
