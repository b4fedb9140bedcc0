#include <algorithm>
#include <deque>
#include <numeric>

#include "psl2/stallings.hpp"

namespace psl2 {

void WorkGraph::add_letter(int from, int to, Letter x) {
  switch (x) {
    case Letter::a: edges.push_back({from, to, false}); break;
    case Letter::A: edges.push_back({to, from, false}); break;
    case Letter::b: edges.push_back({from, to, true}); break;
    case Letter::B: edges.push_back({to, from, true}); break;
  }
}

int WorkGraph::add_path(int from, const Word& w) {
  int cur = from;
  for (auto x : w.letters()) {
    int next = add_vertex();
    add_letter(cur, next, x);
    cur = next;
  }
  return cur;
}

WorkGraph bouquet(const std::vector<Word>& generators) {
  WorkGraph g;
  g.root = g.add_vertex();
  for (const auto& gen : generators) {
    auto w = normalize_shortlex(gen);
    if (w.empty()) continue;
    int cur = g.root;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? g.root : g.add_vertex();
      g.add_letter(cur, next, w[i]);
      cur = next;
    }
  }
  return g;
}

namespace {

// Slot 0: a out, 1: a in, 2: b out, 3: b in.
struct Adj {
  int slot;
  int other;
  auto operator<=>(const Adj&) const = default;
};

class Folder {
 public:
  Folder(const WorkGraph& g, FoldOrder order)
      : parent_(g.vertex_count), rank_(g.vertex_count, 0), adj_(g.vertex_count), order_(order) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& e : g.edges) {
      int base = e.is_b ? 2 : 0;
      adj_[e.src].push_back({base, e.dst});
      adj_[e.dst].push_back({base + 1, e.src});
    }
    for (int v = 0; v < g.vertex_count; ++v) work_.push_back(v);
  }

  void run() {
    while (!work_.empty()) {
      int v;
      if (order_ == FoldOrder::fifo) {
        v = work_.front();
        work_.pop_front();
      } else {
        v = work_.back();
        work_.pop_back();
      }
      process(v);
    }
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  std::vector<Adj>& canonical_adj(int v) {
    auto& list = adj_[v];
    for (auto& e : list) e.other = find(e.other);
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    return list;
  }

 private:
  void process(int v) {
    if (find(v) != v) return;
    auto& list = canonical_adj(v);
    for (std::size_t i = 1; i < list.size(); ++i) {
      if (list[i].slot == list[i - 1].slot) {
        unite(list[i].other, list[i - 1].other);
        work_.push_back(find(v));
        return;
      }
    }
  }

  void unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return;
    if (rank_[x] < rank_[y] || (rank_[x] == rank_[y] && adj_[x].size() < adj_[y].size()))
      std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    adj_[x].insert(adj_[x].end(), adj_[y].begin(), adj_[y].end());
    adj_[y].clear();
    adj_[y].shrink_to_fit();
    work_.push_back(x);
  }

  std::vector<int> parent_;
  std::vector<int> rank_;
  std::vector<std::vector<Adj>> adj_;
  std::deque<int> work_;
  FoldOrder order_;
};

}  // namespace

WorkGraph fold(WorkGraph g, FoldOrder order) {
  Folder f(g, order);
  f.run();
  std::vector<int> idx(g.vertex_count, kNone);
  WorkGraph out;
  for (int v = 0; v < g.vertex_count; ++v) {
    int r = f.find(v);
    if (idx[r] == kNone) idx[r] = out.add_vertex();
  }
  out.root = idx[f.find(g.root)];
  for (int v = 0; v < g.vertex_count; ++v) {
    if (f.find(v) != v) continue;
    for (const auto& e : f.canonical_adj(v)) {
      if (e.slot == 0) out.edges.push_back({idx[v], idx[e.other], false});
      if (e.slot == 2) out.edges.push_back({idx[v], idx[e.other], true});
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  return out;
}

bool is_folded(const WorkGraph& g) {
  std::vector<std::array<int, 4>> seen(g.vertex_count, {kNone, kNone, kNone, kNone});
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& e : edges) {
    int base = e.is_b ? 2 : 0;
    for (auto [slot, v, w] : {std::array{base, e.src, e.dst}, std::array{base + 1, e.dst, e.src}}) {
      if (seen[v][slot] != kNone && seen[v][slot] != w) return false;
      seen[v][slot] = w;
    }
  }
  return true;
}

StallingsGraph psl2_complete(const WorkGraph& folded, FoldOrder order) {
  WorkGraph g = folded;
  auto original = g.edges;
  for (const auto& e : original) {
    if (!e.is_b) {
      if (e.src != e.dst) g.edges.push_back({e.dst, e.src, false});
    } else {
      int r = g.add_vertex();
      g.edges.push_back({e.dst, r, true});
      g.edges.push_back({r, e.src, true});
    }
  }
  g = fold(std::move(g), order);

  int n = g.vertex_count;
  std::vector<int> a(n, kNone), bn(n, kNone), bp(n, kNone);
  for (const auto& e : g.edges) {
    if (!e.is_b) {
      a[e.src] = e.dst;
    } else {
      bn[e.src] = e.dst;
      bp[e.dst] = e.src;
    }
  }
  for (int v = 0; v < n; ++v)
    if (a[v] != kNone && a[a[v]] != v) throw GraphError("internal: a-edges not paired");

  // Prune non-root vertices lacking a- or b-adjacency; no geodesic loop at the root can
  // pass through them.
  std::vector<char> alive(n, 1);
  std::vector<int> stack;
  auto lacking = [&](int v) {
    return v != g.root && alive[v] && (a[v] == kNone || (bn[v] == kNone && bp[v] == kNone));
  };
  for (int v = 0; v < n; ++v)
    if (lacking(v)) stack.push_back(v);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (!lacking(v)) continue;
    alive[v] = 0;
    std::vector<int> touched;
    if (a[v] != kNone) {
      int w = a[v];
      a[w] = kNone;
      a[v] = kNone;
      touched.push_back(w);
    }
    if (bn[v] != kNone) {
      int w = bn[v];
      bp[w] = kNone;
      bn[v] = kNone;
      touched.push_back(w);
    }
    if (bp[v] != kNone) {
      int w = bp[v];
      bn[w] = kNone;
      bp[v] = kNone;
      touched.push_back(w);
    }
    for (int w : touched)
      if (lacking(w)) stack.push_back(w);
  }

  StallingsGraph full(n, g.root);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (a[v] != kNone && a[v] >= v) full.set_a_pair(v, a[v]);
    if (bn[v] != kNone) full.set_b_edge(v, bn[v]);
  }
  auto order_bfs = full.bfs_order(g.root);
  auto result = full.induced(order_bfs);
  result.set_root(0);
  return result;
}

StallingsGraph stallings_graph(const std::vector<Word>& generators, FoldOrder order) {
  return psl2_complete(fold(bouquet(generators), order), order);
}

WorkGraph to_work_graph(const StallingsGraph& g) {
  WorkGraph w;
  w.vertex_count = g.size();
  w.root = g.root().value_or(0);
  for (int v = 0; v < g.size(); ++v) {
    if (g.a(v) != kNone) w.edges.push_back({v, g.a(v), false});
    if (g.b_next(v) != kNone) w.edges.push_back({v, g.b_next(v), true});
  }
  return w;
}

bool member(const StallingsGraph& g, const Word& w) {
  if (!g.root()) throw GraphError("membership requires a rooted graph");
  int v = *g.root();
  auto nf = normalize_shortlex(w);
  for (auto x : nf.letters()) {
    v = g.step(v, x);
    if (v == kNone) return false;
  }
  return v == *g.root();
}

StallingsGraph conjugate(const StallingsGraph& g, const Word& w) {
  if (!g.root()) throw GraphError("conjugation requires a rooted graph");
  WorkGraph work = to_work_graph(g);
  work.root = work.add_path(work.root, normalize_shortlex(w));
  return psl2_complete(fold(std::move(work)));
}

StallingsGraph cyclically_reduced_core(const StallingsGraph& g) {
  int n = g.size();
  StallingsGraph h = g;
  h.set_root(std::nullopt);
  std::vector<char> alive(n, 1);
  int remaining = n;
  bool changed = true;
  while (changed && remaining > 1) {
    changed = false;
    for (int v = 0; v < n && remaining > 1; ++v) {
      if (!alive[v] || (h.a_adjacent(v) && h.b_adjacent(v))) continue;
      h.clear_a(v);
      h.clear_b_out(v);
      if (h.b_prev(v) != kNone) h.clear_b_out(h.b_prev(v));
      alive[v] = 0;
      --remaining;
      changed = true;
    }
  }
  std::vector<int> keep;
  for (int v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  auto core = h.induced(keep);
  auto order = core.bfs_order(0);
  return core.induced(order);
}

}  // namespace psl2
