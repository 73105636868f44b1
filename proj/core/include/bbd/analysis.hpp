#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

/// Reachability from and to x0; strong iff both cover every vertex.
bool is_strong(const BipartiteDigraph& d);

/// Strongly connected components via Tarjan's algorithm, each listed in
/// (part, index) order. Independent of is_strong; tests compare the two.
std::vector<std::vector<Vertex>> strongly_connected_components(const BipartiteDigraph& d);

/// Simple undirected graph on global vertex ids with an edge wherever
/// at least one arc joins the endpoints.
struct UndirectedGraph {
  int n = 0;
  std::vector<std::uint64_t> adj;

  std::uint64_t all_mask() const { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
  int edge_count() const;
  bool has_edge(Vertex u, Vertex v) const { return (adj[u.id()] >> v.id()) & 1u; }
  std::vector<std::pair<Vertex, Vertex>> edges() const;
  bool connected() const;
};

UndirectedGraph underlying_graph(const BipartiteDigraph& d);

/// Articulation points of the underlying graph.
VertexSet cut_vertices(const BipartiteDigraph& d);

/// Vertex sets of the blocks of the underlying graph (maximal 2-connected
/// pieces and bridges). Isolated vertices lie in no block. Every cycle of
/// D lies inside a single block.
std::vector<VertexSet> blocks(const BipartiteDigraph& d);

/// Connected, at least three vertices, no articulation point.
bool is_underlying_2connected(const BipartiteDigraph& d);

/// V(D) = A u B u {u} with no arc between A and B.
struct Separation {
  VertexSet a;
  VertexSet b;
  Vertex u;

  bool valid_for(const BipartiteDigraph& d) const;
};

/// Deterministic choice: the least cut vertex in (part, index) order, A the
/// component of D - u holding the least remaining vertex, B the rest.
/// None when the underlying graph is disconnected or has no cut vertex.
std::optional<Separation> separation(const BipartiteDigraph& d);

struct DominatingPair {
  Vertex u;  // u < v
  Vertex v;
  VertexSet witnesses;  // common out-neighbours
};

std::vector<DominatingPair> dominating_pairs(const BipartiteDigraph& d);

/// max_bk result. `vacuous` means there is no dominating pair, so every B_k
/// holds. Otherwise `level` is min over pairs of max{d(x), d(y)} - (2a - 2),
/// which is negative when even B_0 fails.
struct BkLevel {
  bool vacuous = false;
  int level = 0;

  bool satisfies(int k) const { return vacuous || level >= k; }
  std::string to_string() const { return vacuous ? "vacuous" : std::to_string(level); }
  friend bool operator==(const BkLevel&, const BkLevel&) = default;
};

bool satisfies_bk(const BipartiteDigraph& d, int k);
BkLevel max_bk(const BipartiteDigraph& d);

/// First dominating pair (in listing order) with max{d(x), d(y)} < 2a-2+k.
std::optional<DominatingPair> bk_violation(const BipartiteDigraph& d, int k);

/// Every dominating pair has one member of degree >= 2a-1 and the other >= a+1.
bool satisfies_wang(const BipartiteDigraph& d);
std::optional<DominatingPair> wang_violation(const BipartiteDigraph& d);

/// Every dominating pair has degree sum >= 4a-3.
bool satisfies_sum_condition(const BipartiteDigraph& d);
std::optional<DominatingPair> sum_condition_violation(const BipartiteDigraph& d);

struct ConditionReport {
  int order = 0;
  bool strong = false;
  bool underlying_2connected = false;
  VertexSet cut_vertices;
  std::vector<DominatingPair> dominating_pairs;
  BkLevel max_bk;
  bool wang = false;
  bool sum_condition = false;
  std::vector<std::pair<Vertex, Degree>> degrees;  // x0..x(a-1), y0..y(a-1)
};

ConditionReport analyze(const BipartiteDigraph& d);

}  // namespace bbd
