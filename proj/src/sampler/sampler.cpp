#include "psl2/sampler.hpp"

#include <stdexcept>

namespace psl2 {

SamplerTables::SamplerTables(int max_n) : max_n_(max_n) {
  if (max_n < 1) throw std::invalid_argument("sampler tables need max_n >= 1");
}

const CountTable& SamplerTables::lazy(int slot, SpeciesSpec (*make)()) const {
  std::call_once(flags_[slot], [&] { tables_[slot] = std::make_unique<CountTable>(make(), max_n_); });
  return *tables_[slot];
}

const CountTable& SamplerTables::t2() const { return lazy(0, involution_species); }
const CountTable& SamplerTables::t3() const { return lazy(1, order3_species); }
const CountTable& SamplerTables::t3_fi() const { return lazy(2, order3_permutation_species); }
const CountTable& SamplerTables::t2_loop_free() const { return lazy(3, loop_free_involution_species); }
const CountTable& SamplerTables::t3_loop_free() const { return lazy(4, loop_free_order3_species); }
const CountTable& SamplerTables::t3_triangles() const { return lazy(5, triangle_species); }

const FreeTables& SamplerTables::free() const {
  std::call_once(free_flag_, [&] { free_ = std::make_unique<FreeTables>(free_tables_univariate(max_n_)); });
  return *free_;
}

void SamplerTables::prepare(Family f) const {
  switch (f) {
    case Family::all:
      t2();
      t3();
      break;
    case Family::finite_index:
      t2();
      t3_fi();
      break;
    case Family::free:
      free();
      [[fallthrough]];
    case Family::cr_free:
      t2_loop_free();
      t3_loop_free();
      break;
    case Family::free_finite_index:
      t2_loop_free();
      t3_triangles();
      break;
  }
}

StallingsGraph graph_from_structures(const SetStructure& a, const SetStructure& b) {
  if (a.n != b.n) throw std::invalid_argument("structure sizes differ");
  StallingsGraph g(a.n);
  for (const auto& c : a.components) {
    if (c.size == 1)
      g.set_a_loop(c.atoms[0]);
    else if (c.size == 2)
      g.set_a_pair(c.atoms[0], c.atoms[1]);
    else
      throw std::invalid_argument("a-structure components have size 1 or 2");
  }
  for (const auto& c : b.components) {
    const auto& x = c.atoms;
    switch (c.size) {
      case 1: g.set_b_loop(x[0]); break;
      case 2:
        if (c.shape == 0)
          g.set_b_edge(x[0], x[1]);
        else
          g.set_b_edge(x[1], x[0]);
        break;
      case 3:
        if (c.shape == 0)
          g.set_b_triangle(x[0], x[1], x[2]);
        else
          g.set_b_triangle(x[0], x[2], x[1]);
        break;
      default: throw std::invalid_argument("b-structure components have size 1, 2 or 3");
    }
  }
  return g;
}

namespace {

void check_size(const SamplerTables& t, int n) {
  if (n < 1) throw std::domain_error("size must be at least 1");
  if (n > t.max_size()) throw std::out_of_range("size exceeds sampler tables");
}

bool connected(const StallingsGraph& g) {
  return static_cast<int>(g.bfs_order(0).size()) == g.size();
}

StallingsGraph rooted_at(const StallingsGraph& g, int root) {
  auto h = g.induced(g.bfs_order(root));
  h.set_root(0);
  return h;
}

int loop_count(const StallingsGraph& g) {
  int l = 0;
  for (int v = 0; v < g.size(); ++v) l += (g.a(v) == v) + (g.b_next(v) == v);
  return l;
}

// Core of size m with no loops, drawn with probability proportional to its number of
// isolated b-edges.
StallingsGraph sample_weighted_core(const SamplerTables& t, int m, Rng& rng, RejectionStats* stats) {
  int cap = m / 2;
  while (true) {
    auto g = sample_cyclically_reduced(t, m, Family::cr_free, rng, stats);
    int k = g.type().k3;
    if (static_cast<int>(rng.below(static_cast<std::uint64_t>(cap))) < k) return g;
    if (stats) ++stats->weight_rejections;
  }
}

struct OneLoop {
  StallingsGraph g;
  int vertex;
};

// b-loop graph of size m + 1 from an a-loop graph of size m: the a-loop becomes an
// isolated a-edge to a new vertex carrying the b-loop.
OneLoop wrap_b(OneLoop x) {
  x.g.clear_a(x.vertex);
  int s = x.g.add_vertex();
  x.g.set_a_pair(x.vertex, s);
  x.g.set_b_loop(s);
  return {std::move(x.g), s};
}

// a-loop graph of size m + 1 from a b-loop graph of size m: the b-loop becomes an
// isolated b-edge to a new vertex carrying the a-loop.
OneLoop wrap_a(OneLoop x, bool outward) {
  x.g.clear_b_out(x.vertex);
  int s = x.g.add_vertex();
  if (outward)
    x.g.set_b_edge(x.vertex, s);
  else
    x.g.set_b_edge(s, x.vertex);
  x.g.set_a_loop(s);
  return {std::move(x.g), s};
}

OneLoop sample_a_loop_graph(const SamplerTables& t, int n, Rng& rng, RejectionStats* stats) {
  const auto& f = t.free();
  int m = n;
  int unwrap = 0;
  while (true) {
    std::vector<BigInt> w{m * f.gv[m - 1], m >= 2 ? BigInt(2) * m * (m - 1) * f.ga[m - 2] : BigInt(0)};
    if (choose_weighted(w, rng) == 0) break;
    ++unwrap;
    m -= 2;
  }
  auto core = sample_weighted_core(t, m - 1, rng, stats);
  auto edges = core.b_struct().edges;
  auto [x, y] = edges[rng.below(edges.size())];
  int s = core.add_vertex();
  core.set_b_edge(y, s);
  core.set_b_edge(s, x);
  core.set_a_loop(s);
  OneLoop cur{std::move(core), s};
  for (int i = 0; i < unwrap; ++i) cur = wrap_a(wrap_b(std::move(cur)), rng.coin());
  return cur;
}

StallingsGraph sample_free(const SamplerTables& t, int n, Rng& rng, RejectionStats* stats) {
  const auto& f = t.free();
  std::vector<BigInt> branch{n * f.g0_total[n], f.g1[n]};
  if (choose_weighted(branch, rng) == 0) {
    auto g = sample_cyclically_reduced(t, n, Family::cr_free, rng, stats);
    return rooted_at(g, static_cast<int>(rng.below(n)));
  }
  OneLoop x = choose_weighted(std::vector<BigInt>{f.ga[n], f.gb[n]}, rng) == 0
                  ? sample_a_loop_graph(t, n, rng, stats)
                  : wrap_b(sample_a_loop_graph(t, n - 1, rng, stats));
  if (x.g.a(x.vertex) == x.vertex)
    x.g.clear_a(x.vertex);
  else
    x.g.clear_b_out(x.vertex);
  return rooted_at(x.g, x.vertex);
}

}  // namespace

StallingsGraph sample_cyclically_reduced(const SamplerTables& t, int n, Family f, Rng& rng,
                                         RejectionStats* stats) {
  check_size(t, n);
  const CountTable* a = nullptr;
  const CountTable* b = nullptr;
  switch (f) {
    case Family::all:
      a = &t.t2();
      b = &t.t3();
      break;
    case Family::finite_index:
      a = &t.t2();
      b = &t.t3_fi();
      break;
    case Family::cr_free:
    case Family::free:
      a = &t.t2_loop_free();
      b = &t.t3_loop_free();
      break;
    case Family::free_finite_index:
      a = &t.t2_loop_free();
      b = &t.t3_triangles();
      break;
  }
  if (sgn(a->values[n]) == 0 || sgn(b->values[n]) == 0)
    throw std::domain_error("no cyclically reduced graph of size " + std::to_string(n) +
                            " in family " + to_string(f));
  for (int tries = 0;; ++tries) {
    if (tries > 1000000) throw std::runtime_error("rejection sampler made no progress");
    auto g = graph_from_structures(sample_set(*a, n, rng), sample_set(*b, n, rng));
    if (stats) ++stats->attempts;
    if (connected(g)) return g;
    if (stats) ++stats->disconnected;
  }
}

StallingsGraph sample_subgroup(const SamplerTables& t, int n, Family f, Rng& rng,
                               RejectionStats* stats) {
  check_size(t, n);
  switch (f) {
    case Family::all: {
      if (n == 1) {
        StallingsGraph g(1, 0);
        auto pick = rng.below(4);
        if (pick == 1 || pick == 3) g.set_a_loop(0);
        if (pick == 2 || pick == 3) g.set_b_loop(0);
        return g;
      }
      while (true) {
        auto g = sample_cyclically_reduced(t, n, Family::all, rng, stats);
        int loops = loop_count(g);
        // Accepting with probability (n + l) / 2n makes (graph, root choice) uniform.
        auto i = static_cast<int>(rng.below(2 * static_cast<std::uint64_t>(n)));
        if (i >= n + loops) {
          if (stats) ++stats->root_rejections;
          continue;
        }
        if (i < n) return rooted_at(g, i);
        int target = i - n;
        for (int v = 0; v < n; ++v) {
          if (g.a(v) == v && target-- == 0) {
            g.clear_a(v);
            return rooted_at(g, v);
          }
          if (g.b_next(v) == v && target-- == 0) {
            g.clear_b_out(v);
            return rooted_at(g, v);
          }
        }
        throw std::logic_error("loop index out of range");
      }
    }
    case Family::free:
      if (sgn(t.free().g1[n]) == 0 && sgn(t.free().g0_total[n]) == 0)
        throw std::domain_error("no free subgroup of size " + std::to_string(n));
      return sample_free(t, n, rng, stats);
    case Family::finite_index:
    case Family::cr_free:
    case Family::free_finite_index: {
      auto g = sample_cyclically_reduced(t, n, f, rng, stats);
      return rooted_at(g, static_cast<int>(rng.below(n)));
    }
  }
  throw std::logic_error("unknown family");
}

}  // namespace psl2
