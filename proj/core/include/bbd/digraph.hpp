#pragma once

// Balanced bipartite digraphs with parts X = {x0..x(a-1)} and Y = {y0..y(a-1)}.
//
// Arcs are stored as per-row bitsets in both directions, so neighbourhood
// scans are a handful of word operations. A digraph is frozen once built;
// DigraphBuilder is the only mutable path.

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bbd {

inline constexpr int kMaxHalfOrder = 32;

enum class Part : std::uint8_t { X = 0, Y = 1 };

constexpr Part opposite(Part p) { return p == Part::X ? Part::Y : Part::X; }

struct Vertex {
  Part part = Part::X;
  int index = 0;

  // Global id interleaves the parts: x0 = 0, y0 = 1, x1 = 2, y1 = 3, ...
  // Comparing ids gives the order used for witnesses.
  constexpr int id() const { return 2 * index + static_cast<int>(part); }
  static constexpr Vertex from_id(int id) {
    return Vertex{static_cast<Part>(id & 1), id >> 1};
  }

  std::string name() const;
  static Vertex parse(std::string_view name);

  friend constexpr bool operator==(const Vertex&, const Vertex&) = default;
  // (part, index) order: all of X before Y.
  friend constexpr auto operator<=>(const Vertex&, const Vertex&) = default;
};

constexpr Vertex x(int i) { return Vertex{Part::X, i}; }
constexpr Vertex y(int j) { return Vertex{Part::Y, j}; }

std::ostream& operator<<(std::ostream& os, const Vertex& v);

// Bit 0: x_i -> y_j. Bit 1: y_j -> x_i. Value 3 is a 2-cycle.
enum class ArcCode : std::uint8_t { None = 0, Forward = 1, Backward = 2, Both = 3 };

constexpr int arc_multiplicity(ArcCode c) {
  return (static_cast<int>(c) & 1) + ((static_cast<int>(c) >> 1) & 1);
}

// Subset of V(D) as one bitmask per part.
struct VertexSet {
  std::uint32_t xs = 0;
  std::uint32_t ys = 0;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) {
    for (const auto& v : vs) insert(v);
  }

  static VertexSet full(int a);

  std::uint32_t& mask(Part p) { return p == Part::X ? xs : ys; }
  std::uint32_t mask(Part p) const { return p == Part::X ? xs : ys; }

  void insert(Vertex v) { mask(v.part) |= (1u << v.index); }
  void erase(Vertex v) { mask(v.part) &= ~(1u << v.index); }
  bool contains(Vertex v) const { return (mask(v.part) >> v.index) & 1u; }
  int size() const;
  bool empty() const { return xs == 0 && ys == 0; }
  bool intersects(const VertexSet& o) const { return (xs & o.xs) || (ys & o.ys); }

  // Members in (part, index) order.
  std::vector<Vertex> members() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct Degree {
  int out = 0;
  int in = 0;
  int total = 0;
  friend bool operator==(const Degree&, const Degree&) = default;
};

class DigraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public DigraphError {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

class DigraphBuilder;

class BipartiteDigraph {
 public:
  using Row = std::uint32_t;

  // Digraph on 2a vertices with no arcs. Throws DigraphError unless 1 <= a <= 32.
  static BipartiteDigraph empty(int a);

  int half_order() const { return a_; }
  int order() const { return 2 * a_; }
  int arc_count() const { return arc_count_; }

  ArcCode code(int xi, int yj) const;
  bool has_arc(Vertex from, Vertex to) const;

  // Indices of opposite-part out-/in-neighbours of v.
  Row out_row(Vertex v) const { return v.part == Part::X ? x_out_[v.index] : y_out_[v.index]; }
  Row in_row(Vertex v) const { return v.part == Part::X ? x_in_[v.index] : y_in_[v.index]; }

  Degree degree(Vertex v) const;
  // Counts restricted to s; members of v's own part contribute nothing.
  Degree degree_to_set(Vertex v, const VertexSet& s) const;
  // (|A(A->B)|, |A(B->A)|). Throws DigraphError if A and B overlap.
  std::pair<int, int> arcs_between(const VertexSet& a, const VertexSet& b) const;

  bool contains(Vertex v) const { return v.index >= 0 && v.index < a_; }

  // Exchange the roles of X and Y: x_i becomes y_i and vice versa.
  BipartiteDigraph swapped() const;

  friend bool operator==(const BipartiteDigraph& l, const BipartiteDigraph& r);

 private:
  friend class DigraphBuilder;
  BipartiteDigraph() = default;

  int a_ = 0;
  int arc_count_ = 0;
  std::array<Row, kMaxHalfOrder> x_out_{};  // x_i -> {j}
  std::array<Row, kMaxHalfOrder> x_in_{};   // {j} -> x_i
  std::array<Row, kMaxHalfOrder> y_out_{};  // y_j -> {i}
  std::array<Row, kMaxHalfOrder> y_in_{};   // {i} -> y_j
};

class DigraphBuilder {
 public:
  explicit DigraphBuilder(int a);
  explicit DigraphBuilder(const BipartiteDigraph& d) : d_(d) {}

  int half_order() const { return d_.a_; }

  // Idempotent. Throws DigraphError on same-part endpoints or bad indices.
  DigraphBuilder& add_arc(Vertex from, Vertex to);
  DigraphBuilder& add_two_cycle(Vertex u, Vertex v) { return add_arc(u, v).add_arc(v, u); }
  DigraphBuilder& set_code(int xi, int yj, ArcCode c);

  bool has_arc(Vertex from, Vertex to) const { return d_.has_arc(from, to); }
  // Read-only view of the arcs added so far.
  const BipartiteDigraph& peek() const { return d_; }

  BipartiteDigraph build() const { return d_; }

 private:
  void check(Vertex v) const;
  BipartiteDigraph d_;
};

// Neighbourhoods keyed by global vertex id (Vertex::id), one 64-bit mask
// per vertex. Handy for searches that walk both parts at once.
struct GlobalAdjacency {
  int n = 0;
  std::array<std::uint64_t, 2 * kMaxHalfOrder> out{};
  std::array<std::uint64_t, 2 * kMaxHalfOrder> in{};

  explicit GlobalAdjacency(const BipartiteDigraph& d);
  std::uint64_t all() const { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
  // Every X vertex, i.e. every even id.
  std::uint64_t x_mask() const { return all() & 0x5555555555555555ull; }
  std::uint64_t y_mask() const { return all() & 0xAAAAAAAAAAAAAAAAull; }
};

// Adds every arc in both directions between xs and ys.
void add_complete(DigraphBuilder& b, const std::vector<int>& xs, const std::vector<int>& ys);

// Text format:
//   bbd <a>
//   a rows of a digits in {0,1,2,3}; row i, column j is ArcCode(x_i, y_j)
// Lines starting with '#' are ignored. Every line ends with '\n'.
std::string serialize(const BipartiteDigraph& d);
BipartiteDigraph parse(std::string_view text);
BipartiteDigraph read_digraph_file(const std::string& path);

// Space-separated vertex names, e.g. "x3 y1 x0 y2".
std::string format_vertices(const std::vector<Vertex>& vs);
std::vector<Vertex> parse_vertices(std::string_view text);

}  // namespace bbd
