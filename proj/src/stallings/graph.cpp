#include <algorithm>
#include <deque>
#include <sstream>

#include "psl2/stallings.hpp"

namespace psl2 {

std::string CombinatorialType::to_string() const {
  std::ostringstream os;
  os << '(' << n << ',' << k2 << ',' << k3 << ',' << l2 << ',' << l3 << ',' << m << ')';
  return os.str();
}

StallingsGraph::StallingsGraph(int n, std::optional<int> root)
    : a_(n, kNone), b_next_(n, kNone), b_prev_(n, kNone) {
  set_root(root);
}

void StallingsGraph::set_root(std::optional<int> r) {
  if (r && (*r < 0 || *r >= size())) throw GraphError("root out of range");
  root_ = r;
}

int StallingsGraph::add_vertex() {
  a_.push_back(kNone);
  b_next_.push_back(kNone);
  b_prev_.push_back(kNone);
  return size() - 1;
}

void StallingsGraph::set_a_loop(int v) { set_a_pair(v, v); }

void StallingsGraph::set_a_pair(int u, int v) {
  if (a_[u] != kNone || a_[v] != kNone) throw GraphError("vertex already carries an a-edge");
  a_[u] = v;
  a_[v] = u;
}

void StallingsGraph::clear_a(int v) {
  int w = a_[v];
  if (w == kNone) return;
  a_[v] = kNone;
  a_[w] = kNone;
}

void StallingsGraph::set_b_loop(int v) { set_b_edge(v, v); }

void StallingsGraph::set_b_edge(int from, int to) {
  if (b_next_[from] != kNone || b_prev_[to] != kNone)
    throw GraphError("b-edge would not be folded");
  b_next_[from] = to;
  b_prev_[to] = from;
}

void StallingsGraph::set_b_triangle(int u, int v, int w) {
  set_b_edge(u, v);
  set_b_edge(v, w);
  set_b_edge(w, u);
}

void StallingsGraph::clear_b_out(int v) {
  int w = b_next_[v];
  if (w == kNone) return;
  b_next_[v] = kNone;
  b_prev_[w] = kNone;
}

int StallingsGraph::step(int v, Letter x) const {
  switch (x) {
    case Letter::a:
    case Letter::A: return a_[v];
    case Letter::b: return b_next_[v];
    case Letter::B: return b_prev_[v];
  }
  return kNone;
}

StallingsGraph::AStruct StallingsGraph::a_struct() const {
  AStruct s;
  for (int v = 0; v < size(); ++v) {
    if (a_[v] == v)
      s.loops.push_back(v);
    else if (a_[v] > v)
      s.pairs.emplace_back(v, a_[v]);
  }
  return s;
}

StallingsGraph::BStruct StallingsGraph::b_struct() const {
  BStruct s;
  for (int v = 0; v < size(); ++v) {
    int w = b_next_[v];
    if (w == kNone) continue;
    if (w == v) {
      s.loops.push_back(v);
      continue;
    }
    int x = b_next_[w];
    if (x == kNone) {
      if (b_prev_[v] != kNone) throw GraphError("open b-path of length two");
      s.edges.emplace_back(v, w);
      continue;
    }
    if (x == v || b_next_[x] != v) throw GraphError("b-orbit is not a loop, edge or triangle");
    if (v < w && v < x) s.triangles.push_back({v, w, x});
  }
  return s;
}

CombinatorialType StallingsGraph::type() const {
  auto as = a_struct();
  auto bs = b_struct();
  return {size(),
          static_cast<int>(as.pairs.size()),
          static_cast<int>(bs.edges.size()),
          static_cast<int>(as.loops.size()),
          static_cast<int>(bs.loops.size()),
          static_cast<int>(bs.triangles.size())};
}

StallingsGraph StallingsGraph::induced(const std::vector<int>& keep) const {
  std::vector<int> idx(size(), kNone);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) idx[keep[i]] = i;
  StallingsGraph h(static_cast<int>(keep.size()));
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
    int v = keep[i];
    if (a_[v] != kNone && idx[a_[v]] != kNone) h.a_[i] = idx[a_[v]];
    if (b_next_[v] != kNone && idx[b_next_[v]] != kNone) {
      h.b_next_[i] = idx[b_next_[v]];
      h.b_prev_[idx[b_next_[v]]] = i;
    }
  }
  if (root_ && idx[*root_] != kNone) h.root_ = idx[*root_];
  return h;
}

std::vector<int> StallingsGraph::bfs_order(int start) const {
  std::vector<int> order;
  std::vector<char> seen(size(), 0);
  order.push_back(start);
  seen[start] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (int w : {a_[v], b_next_[v], b_prev_[v]}) {
      if (w != kNone && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
    }
  }
  return order;
}

std::vector<Violation> validate(const StallingsGraph& g, ValidationMode mode) {
  std::vector<Violation> out;
  int n = g.size();
  if (n == 0) {
    out.push_back({"connected", kNone, "empty graph"});
    return out;
  }
  for (int v = 0; v < n; ++v) {
    int w = g.a(v);
    if (w != kNone && (w < 0 || w >= n || g.a(w) != v))
      out.push_back({"consistent", v, "a-edges are not paired"});
    int x = g.b_next(v);
    if (x != kNone && (x < 0 || x >= n || g.b_prev(x) != v))
      out.push_back({"consistent", v, "b successor and predecessor disagree"});
  }
  if (!out.empty()) return out;

  for (int v = 0; v < n; ++v) {
    int w = g.b_next(v);
    if (w == kNone || w == v) continue;
    int x = g.b_next(w);
    if (x == kNone) {
      if (g.b_prev(v) != kNone) out.push_back({"b_triangles", v, "open b-path of length two"});
    } else if (x == v || g.b_next(x) != v) {
      out.push_back({"b_triangles", v, "b-orbit is not a loop, edge or triangle"});
    }
  }

  auto order = g.bfs_order(0);
  if (static_cast<int>(order.size()) != n)
    out.push_back({"connected", kNone,
                   std::to_string(n - static_cast<int>(order.size())) + " unreachable vertices"});

  std::optional<int> exempt;
  if (mode == ValidationMode::rooted) {
    if (!g.root()) out.push_back({"root", kNone, "rooted graph has no root"});
    exempt = g.root();
  }
  bool single = n == 1 && mode != ValidationMode::proper;
  for (int v = 0; v < n && !single; ++v) {
    if (exempt && *exempt == v) continue;
    if (!g.a_adjacent(v)) out.push_back({"adjacency", v, "no a-adjacency"});
    if (!g.b_adjacent(v)) out.push_back({"adjacency", v, "no b-adjacency"});
  }
  return out;
}

bool is_valid(const StallingsGraph& g, ValidationMode mode) { return validate(g, mode).empty(); }

namespace {

void put_int(std::string& s, int x) {
  auto u = static_cast<unsigned>(x + 1);
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((u >> (8 * i)) & 0xff));
}

}  // namespace

std::string rooted_canonical_form(const StallingsGraph& g, int root) {
  auto order = g.bfs_order(root);
  if (static_cast<int>(order.size()) != g.size())
    throw GraphError("canonical form requires a connected graph");
  std::vector<int> idx(g.size());
  for (int i = 0; i < g.size(); ++i) idx[order[i]] = i;
  std::string s;
  s.reserve(4 + 8 * g.size());
  put_int(s, g.size());
  for (int v : order) {
    put_int(s, g.a(v) == kNone ? kNone : idx[g.a(v)]);
    put_int(s, g.b_next(v) == kNone ? kNone : idx[g.b_next(v)]);
  }
  return s;
}

std::string canonical_form(const StallingsGraph& g) {
  if (g.root()) return "R" + rooted_canonical_form(g, *g.root());
  std::string best;
  for (int v = 0; v < g.size(); ++v) {
    auto s = rooted_canonical_form(g, v);
    if (v == 0 || s < best) best = std::move(s);
  }
  return "U" + best;
}

nlohmann::json to_json(const StallingsGraph& g) {
  auto as = g.a_struct();
  auto bs = g.b_struct();
  nlohmann::json j;
  j["n"] = g.size();
  j["root"] = g.root() ? nlohmann::json(*g.root()) : nlohmann::json(nullptr);
  nlohmann::json pairs = nlohmann::json::array();
  for (auto [u, v] : as.pairs) pairs.push_back({u, v});
  j["a"] = {{"loops", as.loops}, {"pairs", pairs}};
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : bs.edges) edges.push_back({u, v});
  nlohmann::json tris = nlohmann::json::array();
  for (auto t : bs.triangles) tris.push_back({t[0], t[1], t[2]});
  j["b"] = {{"loops", bs.loops}, {"edges", edges}, {"triangles", tris}};
  return j;
}

StallingsGraph from_json(const nlohmann::json& j) {
  try {
    int n = j.at("n").get<int>();
    if (n < 1) throw GraphError("graph must have at least one vertex");
    StallingsGraph g(n);
    auto check = [n](int v) {
      if (v < 0 || v >= n) throw GraphError("vertex " + std::to_string(v) + " out of range");
      return v;
    };
    const auto& a = j.at("a");
    for (auto& v : a.value("loops", nlohmann::json::array())) g.set_a_loop(check(v.get<int>()));
    for (auto& p : a.value("pairs", nlohmann::json::array())) {
      int u = check(p.at(0).get<int>()), v = check(p.at(1).get<int>());
      if (u == v) throw GraphError("a-pair joins a vertex to itself");
      g.set_a_pair(u, v);
    }
    const auto& b = j.at("b");
    for (auto& v : b.value("loops", nlohmann::json::array())) g.set_b_loop(check(v.get<int>()));
    for (auto& e : b.value("edges", nlohmann::json::array()))
      g.set_b_edge(check(e.at(0).get<int>()), check(e.at(1).get<int>()));
    for (auto& t : b.value("triangles", nlohmann::json::array()))
      g.set_b_triangle(check(t.at(0).get<int>()), check(t.at(1).get<int>()),
                       check(t.at(2).get<int>()));
    if (j.contains("root") && !j["root"].is_null()) g.set_root(check(j["root"].get<int>()));
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw GraphError(std::string("malformed graph JSON: ") + e.what());
  }
}

std::string to_dot(const StallingsGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v = 0; v < g.size(); ++v) {
    os << "  " << v;
    if (g.root() && *g.root() == v) os << " [shape=doublecircle]";
    os << ";\n";
  }
  auto as = g.a_struct();
  for (int v : as.loops) os << "  " << v << " -> " << v << " [label=a, dir=none, color=red];\n";
  for (auto [u, v] : as.pairs)
    os << "  " << u << " -> " << v << " [label=a, dir=none, color=red];\n";
  for (int v = 0; v < g.size(); ++v)
    if (g.b_next(v) != kNone)
      os << "  " << v << " -> " << g.b_next(v) << " [label=b, color=blue];\n";
  os << "}\n";
  return os.str();
}

}  // namespace psl2
