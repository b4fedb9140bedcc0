#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "psl2/words.hpp"

namespace psl2 {

inline constexpr int kNone = -1;

// (n, k2, k3, l2, l3, m): vertices, isolated a-edges, isolated b-edges, a-loops, b-loops,
// b-triangles.
struct CombinatorialType {
  int n = 0;
  int k2 = 0;
  int k3 = 0;
  int l2 = 0;
  int l3 = 0;
  int m = 0;
  auto operator<=>(const CombinatorialType&) const = default;
  std::string to_string() const;
};

enum class ValidationMode { rooted, cyclically_reduced, proper };

struct Violation {
  std::string property;  // connected, consistent, b_triangles, adjacency, root
  int vertex = kNone;
  std::string detail;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A folded graph where a acts as a partial involution and b as a partial injection.
// Vertex ids are 0..n-1.
class StallingsGraph {
 public:
  struct AStruct {
    std::vector<int> loops;
    std::vector<std::pair<int, int>> pairs;  // first < second
  };
  struct BStruct {
    std::vector<int> loops;
    std::vector<std::pair<int, int>> edges;         // directed first -> second
    std::vector<std::array<int, 3>> triangles;      // cycle order, smallest vertex first
  };

  StallingsGraph() = default;
  explicit StallingsGraph(int n, std::optional<int> root = std::nullopt);

  int size() const { return static_cast<int>(a_.size()); }
  std::optional<int> root() const { return root_; }
  void set_root(std::optional<int> r);

  int a(int v) const { return a_[v]; }
  int b_next(int v) const { return b_next_[v]; }
  int b_prev(int v) const { return b_prev_[v]; }
  bool a_adjacent(int v) const { return a_[v] != kNone; }
  bool b_adjacent(int v) const { return b_next_[v] != kNone || b_prev_[v] != kNone; }

  int add_vertex();
  void set_a_loop(int v);
  void set_a_pair(int u, int v);
  void clear_a(int v);
  void set_b_loop(int v);
  void set_b_edge(int from, int to);
  void set_b_triangle(int u, int v, int w);  // u -> v -> w -> u
  void clear_b_out(int v);

  // Follows a letter from v; kNone when undefined.
  int step(int v, Letter x) const;

  AStruct a_struct() const;
  BStruct b_struct() const;  // requires closed b-orbits
  CombinatorialType type() const;

  // Keeps the listed vertices, renumbered by their position in keep; edges to dropped
  // vertices are removed.
  StallingsGraph induced(const std::vector<int>& keep) const;

  // BFS from the root (or vertex 0) visiting a, b_next, b_prev; returns the new order.
  std::vector<int> bfs_order(int start) const;

  bool operator==(const StallingsGraph&) const = default;

 private:
  std::vector<int> a_;
  std::vector<int> b_next_;
  std::vector<int> b_prev_;
  std::optional<int> root_;
};

// Multigraph used while folding. Edges are stored for the letters a and b only; inverse
// letters are recorded as reversed edges.
struct WorkEdge {
  int src;
  int dst;
  bool is_b;
  auto operator<=>(const WorkEdge&) const = default;
};

struct WorkGraph {
  int vertex_count = 0;
  int root = 0;
  std::vector<WorkEdge> edges;

  int add_vertex() { return vertex_count++; }
  void add_letter(int from, int to, Letter x);
  // Appends a path labeled w starting at from; returns its end.
  int add_path(int from, const Word& w);
};

enum class FoldOrder { fifo, lifo };

// Bouquet of loops at the root labeled by the shortlex forms of the generators.
WorkGraph bouquet(const std::vector<Word>& generators);

// Identifies edges with a common endpoint and label until none remain. The result is
// renumbered by first original occurrence, with duplicate edges removed.
WorkGraph fold(WorkGraph g, FoldOrder order = FoldOrder::fifo);
bool is_folded(const WorkGraph& g);

// Adds reverse a-edges and a closing b-triangle for every b-edge, folds, then prunes
// non-root vertices lacking a- or b-adjacency.
StallingsGraph psl2_complete(const WorkGraph& folded, FoldOrder order = FoldOrder::fifo);

StallingsGraph stallings_graph(const std::vector<Word>& generators,
                               FoldOrder order = FoldOrder::fifo);

WorkGraph to_work_graph(const StallingsGraph& g);

bool member(const StallingsGraph& g, const Word& w);
StallingsGraph conjugate(const StallingsGraph& g, const Word& w);
StallingsGraph cyclically_reduced_core(const StallingsGraph& g);

std::vector<Violation> validate(const StallingsGraph& g, ValidationMode mode);
bool is_valid(const StallingsGraph& g, ValidationMode mode);

// Byte string equal for two graphs iff they are isomorphic (root-preserving when rooted,
// minimum over all roots otherwise).
std::string canonical_form(const StallingsGraph& g);
std::string rooted_canonical_form(const StallingsGraph& g, int root);

nlohmann::json to_json(const StallingsGraph& g);
StallingsGraph from_json(const nlohmann::json& j);
std::string to_dot(const StallingsGraph& g, const std::string& name = "G");

}  // namespace psl2
