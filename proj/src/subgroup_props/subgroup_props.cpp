#include "psl2/subgroup_props.hpp"

#include <stdexcept>

namespace psl2 {

std::optional<std::int64_t> subgroup_index(const StallingsGraph& g) {
  auto t = g.type();
  if (t.k3 == 0 && is_valid(g, ValidationMode::proper)) return t.n;
  return std::nullopt;
}

bool is_finite_index(const StallingsGraph& g) { return subgroup_index(g).has_value(); }

IsomorphismType isomorphism_type(const StallingsGraph& g) {
  auto t = g.type();
  if (t.n == 1) return {t.l2, t.l3, 0};
  int six_r = t.n - 2 * t.k3 - 3 * t.l2 - 4 * t.l3;
  if (g.root()) {
    int v = *g.root();
    bool a = g.a_adjacent(v), b = g.b_adjacent(v);
    if (a && b)
      six_r += 6;
    else if (a)
      six_r += 2;
    else if (b)
      six_r += 3;
    else
      throw GraphError("isolated root in a graph with more than one vertex");
  } else {
    six_r += 6;
  }
  if (six_r % 6 != 0 || six_r < 0) throw GraphError("inconsistent combinatorial type");
  return {t.l2, t.l3, six_r / 6};
}

bool is_free(const StallingsGraph& g) {
  auto t = g.type();
  return t.l2 == 0 && t.l3 == 0;
}

std::vector<Word> Basis::all() const {
  std::vector<Word> out;
  for (const auto* part : {&order2, &order3, &free_from_a, &free_from_b})
    out.insert(out.end(), part->begin(), part->end());
  return out;
}

Basis basis(const StallingsGraph& g) {
  int n = g.size();
  int root = g.root().value_or(0);
  auto bs = g.b_struct();
  std::vector<int> tri_of(n, kNone);
  for (int i = 0; i < static_cast<int>(bs.triangles.size()); ++i)
    for (int v : bs.triangles[i]) tri_of[v] = i;

  std::vector<Word> path(n);
  std::vector<char> seen(n, 0);
  std::vector<char> a_tree(n, 0);  // indexed by either endpoint of an a-pair
  std::vector<char> b_tree(n, 0);  // indexed by the source of a b-edge
  std::vector<int> queue;

  auto discover = [&](int v, Word w) {
    seen[v] = 1;
    path[v] = std::move(w);
    queue.push_back(v);
    if (tri_of[v] == kNone) return;
    int next = g.b_next(v), prev = g.b_prev(v);
    seen[next] = seen[prev] = 1;
    path[next] = path[v] * Word({Letter::b});
    path[prev] = path[v] * Word({Letter::B});
    b_tree[v] = b_tree[prev] = 1;
    queue.push_back(next);
    queue.push_back(prev);
  };

  discover(root, Word());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    int w = g.a(v);
    if (w != kNone && !seen[w]) {
      a_tree[v] = a_tree[w] = 1;
      discover(w, path[v] * Word({Letter::a}));
    }
    if (tri_of[v] != kNone) continue;
    w = g.b_next(v);
    if (w != kNone && !seen[w]) {
      b_tree[v] = 1;
      discover(w, path[v] * Word({Letter::b}));
    }
    w = g.b_prev(v);
    if (w != kNone && !seen[w]) {
      b_tree[w] = 1;
      discover(w, path[v] * Word({Letter::B}));
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw GraphError("basis requires a connected graph");

  auto cycle = [&](int p, Letter x, int q) {
    return normalize_shortlex(path[p] * Word({x}) * path[q].inverse());
  };

  Basis out;
  auto as = g.a_struct();
  for (int v : as.loops) out.order2.push_back(cycle(v, Letter::a, v));
  for (auto [p, q] : as.pairs) {
    if (a_tree[p]) continue;
    auto u = cycle(p, Letter::a, q), w = cycle(q, Letter::a, p);
    out.free_from_a.push_back(u < w ? u : w);
  }
  for (int v : bs.loops) out.order3.push_back(cycle(v, Letter::b, v));
  for (auto [p, q] : bs.edges)
    if (!b_tree[p]) out.free_from_b.push_back(cycle(p, Letter::b, q));
  return out;
}

bool is_realizable(const CombinatorialType& t) {
  if (t.n < 1 || t.k2 < 0 || t.k3 < 0 || t.l2 < 0 || t.l3 < 0 || t.m < 0) return false;
  if (t.n != 2 * t.k2 + t.l2 || t.n != 2 * t.k3 + t.l3 + 3 * t.m) return false;
  int d = t.m - t.l2 - t.l3;
  return d % 2 == 0 && d >= -2;
}

namespace {

// A b-triangle t0 -> t1 -> t2 -> t0 carrying an a-loop on t0, or an a-edge from t0 to a
// vertex with a b-loop. t1 and t2 stay open.
struct Unit {
  int t1;
  int t2;
};

Unit add_unit(StallingsGraph& g, bool b_loop) {
  int t0 = g.add_vertex(), t1 = g.add_vertex(), t2 = g.add_vertex();
  g.set_b_triangle(t0, t1, t2);
  if (b_loop) {
    int x = g.add_vertex();
    g.set_a_pair(t0, x);
    g.set_b_loop(x);
  } else {
    g.set_a_loop(t0);
  }
  return {t1, t2};
}

void close_end(StallingsGraph& g, int v, bool b_loop) {
  if (b_loop) {
    int x = g.add_vertex();
    g.set_a_pair(v, x);
    g.set_b_loop(x);
  } else {
    g.set_a_loop(v);
  }
}

// A binary tree of `count` triangles (count odd); returns the open vertex of its root.
int add_tree(StallingsGraph& g, int count) {
  int x0 = g.add_vertex(), x1 = g.add_vertex(), x2 = g.add_vertex();
  g.set_b_triangle(x0, x1, x2);
  if (count == 1) {
    g.set_a_pair(x1, x2);
  } else {
    g.set_a_pair(x1, add_tree(g, 1));
    g.set_a_pair(x2, add_tree(g, count - 2));
  }
  return x0;
}

// Replaces the a-edge at u by a path labeled (ab)^k a; an a-loop moves to the path end.
void subdivide(StallingsGraph& g, int u, int k) {
  int v = g.a(u);
  g.clear_a(u);
  int prev = u;
  for (int i = 0; i < k; ++i) {
    int x = g.add_vertex(), y = g.add_vertex();
    g.set_a_pair(prev, x);
    g.set_b_edge(x, y);
    prev = y;
  }
  if (v == u)
    g.set_a_loop(prev);
  else
    g.set_a_pair(prev, v);
}

// Alternating path with loops at both ends (no triangles).
StallingsGraph realize_path(const CombinatorialType& t) {
  StallingsGraph g(1);
  if (t.l2 == 1 && t.k3 == 0) {
    g.set_a_loop(0);
    g.set_b_loop(0);
    return g;
  }
  int cur = 0;
  bool need_a = t.l3 > 0;  // the first vertex gets a b-loop when one is available
  if (need_a)
    g.set_b_loop(0);
  else
    g.set_a_loop(0);
  int a_left = t.k2, b_left = t.k3;
  while (a_left > 0 || b_left > 0) {
    int next = g.add_vertex();
    if (need_a) {
      g.set_a_pair(cur, next);
      --a_left;
    } else {
      g.set_b_edge(cur, next);
      --b_left;
    }
    need_a = !need_a;
    cur = next;
  }
  if (need_a)
    g.set_a_loop(cur);
  else
    g.set_b_loop(cur);
  return g;
}

}  // namespace

StallingsGraph realize_type(const CombinatorialType& t) {
  if (!is_realizable(t)) throw std::invalid_argument("type " + t.to_string() + " is not realizable");
  int loops = t.l2 + t.l3;
  int d = t.m - loops;

  if (t.m == 0 && d == -2) return realize_path(t);
  if (t.m == 0 && d == 0) {
    StallingsGraph g(2 * t.k3);
    for (int i = 0; i < t.k3; ++i) {
      g.set_a_pair(2 * i, 2 * i + 1);
      g.set_b_edge(2 * i + 1, (2 * i + 2) % (2 * t.k3));
    }
    return g;
  }

  StallingsGraph g(0);
  int b_loops = t.l3, a_loops = t.l2;
  auto take_loop = [&] {
    if (b_loops > 0) {
      --b_loops;
      return true;
    }
    --a_loops;
    return false;
  };

  if (d == -2) {
    std::vector<Unit> units;
    for (int i = 0; i < t.m; ++i) units.push_back(add_unit(g, take_loop()));
    for (int i = 0; i + 1 < t.m; ++i) g.set_a_pair(units[i].t2, units[i + 1].t1);
    close_end(g, units.front().t1, take_loop());
    close_end(g, units.back().t2, take_loop());
  } else if (d == 0) {
    std::vector<Unit> units;
    for (int i = 0; i < t.m; ++i) units.push_back(add_unit(g, take_loop()));
    for (int i = 0; i < t.m; ++i) g.set_a_pair(units[i].t2, units[(i + 1) % t.m].t1);
  } else {
    std::vector<Unit> units;
    for (int i = 0; i < loops; ++i) units.push_back(add_unit(g, take_loop()));
    for (int i = 0; i + 1 < loops; ++i) g.set_a_pair(units[i].t2, units[i + 1].t1);
    int n0 = g.add_vertex(), n1 = g.add_vertex(), n2 = g.add_vertex();
    g.set_b_triangle(n0, n1, n2);
    if (loops == 0) {
      g.set_a_pair(n0, n1);
    } else {
      g.set_a_pair(units.front().t1, n0);
      g.set_a_pair(units.back().t2, n1);
    }
    g.set_a_pair(n2, add_tree(g, d - 1));
  }

  if (t.k3 > 0) {
    int u = kNone;
    for (int v = 0; v < g.size() && u == kNone; ++v)
      if (g.a(v) != kNone && g.a(v) != v) u = v;
    for (int v = 0; v < g.size() && u == kNone; ++v)
      if (g.a(v) == v) u = v;
    if (u == kNone) throw std::logic_error("no a-edge to subdivide");
    subdivide(g, u, t.k3);
  }
  return g;
}

}  // namespace psl2
