#include "bbd/analysis.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace bbd {

namespace {

// Vertices reachable from `root` following `step` masks.
std::uint64_t closure(const std::array<std::uint64_t, 64>& step, int root) {
  std::uint64_t seen = 1ull << root;
  std::uint64_t frontier = seen;
  while (frontier) {
    std::uint64_t next = 0;
    for (auto m = frontier; m; m &= m - 1) next |= step[std::countr_zero(m)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<Vertex> ids_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (auto m = mask; m; m &= m - 1) out.push_back(Vertex::from_id(std::countr_zero(m)));
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet ids_to_set(std::uint64_t mask) {
  VertexSet s;
  for (auto m = mask; m; m &= m - 1) s.insert(Vertex::from_id(std::countr_zero(m)));
  return s;
}

template <typename Pred>
std::optional<DominatingPair> first_violation(const BipartiteDigraph& d, Pred ok) {
  for (auto& p : dominating_pairs(d))
    if (!ok(d.degree(p.u).total, d.degree(p.v).total)) return p;
  return std::nullopt;
}

}  // namespace

bool is_strong(const BipartiteDigraph& d) {
  GlobalAdjacency g(d);
  return closure(g.out, 0) == g.all() && closure(g.in, 0) == g.all();
}

std::vector<std::vector<Vertex>> strongly_connected_components(const BipartiteDigraph& d) {
  const int n = d.order();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  std::vector<std::vector<Vertex>> comps;
  int counter = 0;

  std::function<void(int)> connect = [&](int v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    auto from = Vertex::from_id(v);
    for (int w = 0; w < n; ++w) {
      if (!d.has_arc(from, Vertex::from_id(w))) continue;
      if (index[w] < 0) {
        connect(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<Vertex> comp;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(Vertex::from_id(w));
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  };

  for (int v = 0; v < n; ++v)
    if (index[v] < 0) connect(v);
  return comps;
}

int UndirectedGraph::edge_count() const {
  int twice = 0;
  for (auto m : adj) twice += std::popcount(m);
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> UndirectedGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int u = 0; u < n; ++u)
    for (auto m = adj[u] & ~((2ull << u) - 1); m; m &= m - 1)
      out.emplace_back(Vertex::from_id(u), Vertex::from_id(std::countr_zero(m)));
  return out;
}

bool UndirectedGraph::connected() const {
  if (n == 0) return true;
  std::array<std::uint64_t, 64> step{};
  std::copy(adj.begin(), adj.end(), step.begin());
  auto all = n >= 64 ? ~0ull : ((1ull << n) - 1);
  return closure(step, 0) == all;
}

UndirectedGraph underlying_graph(const BipartiteDigraph& d) {
  GlobalAdjacency g(d);
  UndirectedGraph u;
  u.n = g.n;
  u.adj.resize(g.n);
  for (int v = 0; v < g.n; ++v) u.adj[v] = g.out[v] | g.in[v];
  return u;
}

VertexSet cut_vertices(const BipartiteDigraph& d) {
  auto g = underlying_graph(d);
  const int n = g.n;
  std::vector<int> disc(n, -1), low(n, 0);
  std::uint64_t cuts = 0;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (auto m = g.adj[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (w == parent) continue;
      if (disc[w] >= 0) {
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      ++children;
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (parent >= 0 && low[w] >= disc[v]) cuts |= 1ull << v;
    }
    if (parent < 0 && children > 1) cuts |= 1ull << v;
  };

  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return ids_to_set(cuts);
}

std::vector<VertexSet> blocks(const BipartiteDigraph& d) {
  auto g = underlying_graph(d);
  const int n = g.n;
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint64_t> found;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (auto m = g.adj[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (w == parent) continue;
      if (disc[w] >= 0) {
        if (disc[w] < disc[v]) edges.emplace_back(v, w);
        low[v] = std::min(low[v], disc[w]);
        continue;
      }
      edges.emplace_back(v, w);
      dfs(w, v);
      low[v] = std::min(low[v], low[w]);
      if (low[w] >= disc[v]) {
        std::uint64_t block = 0;
        std::pair<int, int> e;
        do {
          e = edges.back();
          edges.pop_back();
          block |= (1ull << e.first) | (1ull << e.second);
        } while (e != std::pair{v, w});
        found.push_back(block);
      }
    }
  };

  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(found.begin(), found.end(), [](std::uint64_t l, std::uint64_t r) {
    return std::countr_zero(l) != std::countr_zero(r) ? std::countr_zero(l) < std::countr_zero(r) : l < r;
  });
  std::vector<VertexSet> out;
  for (auto b : found) out.push_back(ids_to_set(b));
  return out;
}

bool is_underlying_2connected(const BipartiteDigraph& d) {
  if (d.order() < 3) return false;
  return underlying_graph(d).connected() && cut_vertices(d).empty();
}

bool Separation::valid_for(const BipartiteDigraph& d) const {
  if (a.empty() || b.empty() || a.intersects(b) || a.contains(u) || b.contains(u)) return false;
  VertexSet all = a;
  all.xs |= b.xs;
  all.ys |= b.ys;
  all.insert(u);
  if (!(all == VertexSet::full(d.half_order()))) return false;
  auto [ab, ba] = d.arcs_between(a, b);
  return ab == 0 && ba == 0;
}

std::optional<Separation> separation(const BipartiteDigraph& d) {
  auto g = underlying_graph(d);
  if (!g.connected()) return std::nullopt;
  auto cuts = cut_vertices(d).members();
  if (cuts.empty()) return std::nullopt;

  Vertex u = cuts.front();
  std::array<std::uint64_t, 64> step{};
  auto without_u = ~(1ull << u.id());
  for (int v = 0; v < g.n; ++v) step[v] = g.adj[v] & without_u;

  auto rest = ids_to_vertices(g.all_mask() & without_u);
  auto component = closure(step, rest.front().id());
  Separation s;
  s.u = u;
  s.a = ids_to_set(component);
  s.b = ids_to_set(g.all_mask() & without_u & ~component);
  return s;
}

std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& d) {
  std::vector<DominatingPair> out;
  const int a = d.half_order();
  for (Part p : {Part::X, Part::Y}) {
    for (int i = 0; i < a; ++i) {
      for (int j = i + 1; j < a; ++j) {
        Vertex u{p, i}, v{p, j};
        auto common = d.out_row(u) & d.out_row(v);
        if (!common) continue;
        DominatingPair dp{u, v, {}};
        dp.witnesses.mask(opposite(p)) = common;
        out.push_back(dp);
      }
    }
  }
  return out;
}

bool satisfies_bk(const BipartiteDigraph& d, int k) { return !bk_violation(d, k).has_value(); }

std::optional<DominatingPair> bk_violation(const BipartiteDigraph& d, int k) {
  const int need = 2 * d.half_order() - 2 + k;
  return first_violation(d, [need](int du, int dv) { return std::max(du, dv) >= need; });
}

BkLevel max_bk(const BipartiteDigraph& d) {
  auto pairs = dominating_pairs(d);
  if (pairs.empty()) return BkLevel{true, 0};
  int worst = 2 * d.order();
  for (auto& p : pairs) worst = std::min(worst, std::max(d.degree(p.u).total, d.degree(p.v).total));
  return BkLevel{false, worst - (2 * d.half_order() - 2)};
}

std::optional<DominatingPair> wang_violation(const BipartiteDigraph& d) {
  const int a = d.half_order();
  return first_violation(d, [a](int du, int dv) {
    return (du >= 2 * a - 1 && dv >= a + 1) || (dv >= 2 * a - 1 && du >= a + 1);
  });
}

bool satisfies_wang(const BipartiteDigraph& d) { return !wang_violation(d).has_value(); }

std::optional<DominatingPair> sum_condition_violation(const BipartiteDigraph& d) {
  const int need = 4 * d.half_order() - 3;
  return first_violation(d, [need](int du, int dv) { return du + dv >= need; });
}

bool satisfies_sum_condition(const BipartiteDigraph& d) {
  return !sum_condition_violation(d).has_value();
}

ConditionReport analyze(const BipartiteDigraph& d) {
  ConditionReport r;
  r.order = d.order();
  r.strong = is_strong(d);
  r.underlying_2connected = is_underlying_2connected(d);
  r.cut_vertices = cut_vertices(d);
  r.dominating_pairs = dominating_pairs(d);
  r.max_bk = max_bk(d);
  r.wang = satisfies_wang(d);
  r.sum_condition = satisfies_sum_condition(d);
  for (const auto& v : VertexSet::full(d.half_order()).members()) r.degrees.emplace_back(v, d.degree(v));
  return r;
}

}  // namespace bbd
