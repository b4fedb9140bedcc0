#include "psl2/oracle.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace psl2 {

std::vector<std::vector<int>> all_involutions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p(n, kNone);
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < n && p[i] != kNone) ++i;
    if (i == n) {
      out.push_back(p);
      return;
    }
    p[i] = i;
    rec();
    for (int j = i + 1; j < n; ++j) {
      if (p[j] != kNone) continue;
      p[i] = j;
      p[j] = i;
      rec();
      p[j] = kNone;
    }
    p[i] = kNone;
  };
  rec();
  return out;
}

std::vector<std::vector<int>> all_b_structures(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> next(n, kNone);
  std::vector<char> used(n, 0);
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      out.push_back(next);
      return;
    }
    used[i] = 1;
    next[i] = i;
    rec();
    next[i] = kNone;
    for (int j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      next[i] = j;
      rec();
      next[i] = kNone;
      next[j] = i;
      rec();
      next[j] = kNone;
      for (int k = i + 1; k < n; ++k) {
        if (used[k]) continue;
        used[k] = 1;
        next[i] = j;
        next[j] = k;
        next[k] = i;
        rec();
        next[i] = next[j] = next[k] = kNone;
        used[k] = 0;
      }
      used[j] = 0;
    }
    used[i] = 0;
  };
  rec();
  return out;
}

namespace {

struct Collector {
  int n;
  std::array<std::unordered_set<std::string>, 5> classes;
  BruteCounts counts;
  bool keep_sets = true;

  void add(Family f, const std::string& key) { classes[static_cast<int>(f)].insert(key); }

  void visit(const std::vector<int>& inv, const std::vector<int>& bs) {
    StallingsGraph g(n);
    for (int v = 0; v < n; ++v) {
      if (inv[v] >= v) g.set_a_pair(v, inv[v]);
      if (bs[v] != kNone) g.set_b_edge(v, bs[v]);
    }
    if (static_cast<int>(g.bfs_order(0).size()) != n) return;
    auto t = g.type();
    int loops = t.l2 + t.l3;
    counts.gpr[loops] += 1;
    counts.labelled_rooted += n + loops;
    counts.types.insert(t);

    for (int v = 0; v < n; ++v) {
      auto key = rooted_canonical_form(g, v);
      add(Family::all, key);
      if (t.k3 == 0) add(Family::finite_index, key);
      if (loops == 0) {
        add(Family::cr_free, key);
        add(Family::free, key);
        if (t.k3 == 0) add(Family::free_finite_index, key);
      }
    }
    for (int v = 0; v < n; ++v) {
      for (bool a_loop : {true, false}) {
        if (a_loop ? g.a(v) != v : g.b_next(v) != v) continue;
        StallingsGraph h = g;
        if (a_loop)
          h.clear_a(v);
        else
          h.clear_b_out(v);
        auto key = rooted_canonical_form(h, v);
        add(Family::all, key);
        if (loops == 1) add(Family::free, key);
      }
    }
  }
};

Collector run(int n) {
  if (n < 1 || n > kMaxBruteSize)
    throw std::length_error("brute force enumeration supports sizes 1.." + std::to_string(kMaxBruteSize));
  Collector c{n, {}, {}};
  c.counts.n = n;
  c.counts.gpr.assign(2 * n + 1, 0);
  auto invs = all_involutions(n);
  auto bss = all_b_structures(n);
  for (const auto& inv : invs)
    for (const auto& bs : bss) c.visit(inv, bs);
  if (n == 1) {
    c.add(Family::all, rooted_canonical_form(StallingsGraph(1), 0));
    c.counts.labelled_rooted += 1;
  }
  for (int f = 0; f < 5; ++f) c.counts.subgroups[f] = static_cast<std::int64_t>(c.classes[f].size());
  return c;
}

}  // namespace

BruteCounts brute_counts(int n) { return run(n).counts; }

std::set<std::string> brute_subgroup_classes(int n, Family f) {
  auto c = run(n);
  const auto& s = c.classes[static_cast<int>(f)];
  std::set<std::string> out;
  for (const auto& key : s) out.insert("R" + key);
  return out;
}

std::set<Word> enumerate_loop_words(const StallingsGraph& g, int max_len) {
  if (!g.root()) throw GraphError("loop words require a rooted graph");
  struct State {
    int vertex;
    std::vector<Letter> letters;
  };
  std::set<Word> out{Word()};
  std::vector<State> frontier{{*g.root(), {}}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<State> next;
    for (const auto& st : frontier) {
      // Normal forms alternate a with b or B.
      bool after_a = !st.letters.empty() && st.letters.back() == Letter::a;
      bool after_b = !st.letters.empty() && !after_a;
      for (Letter x : {Letter::a, Letter::b, Letter::B}) {
        if (x == Letter::a ? after_a : after_b) continue;
        int w = g.step(st.vertex, x);
        if (w == kNone) continue;
        State s2{w, st.letters};
        s2.letters.push_back(x);
        if (w == *g.root()) out.insert(Word(s2.letters));
        next.push_back(std::move(s2));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace psl2
