#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

// Exemplar digraphs.

/// Order 10 exception: K*_{3,2} on {x1,x2,x3} x {y0,y1}, {x1,x2,x3} -> {y2,y3,y4},
/// x4 <-> y1, x0 <-> y0, x_i <-> y_{i+1} for i in 1..3.
BipartiteDigraph build_d10();

/// Order 8 exception: K*_{2,3} on {x1,x2} x {y1,y2,y3} plus
/// x0 <-> y0, x0 <-> y1, x3 <-> y3.
BipartiteDigraph build_d8();

/// K*_{p,q} on x0..x(p-1) and y0..y(q-1). When p != q the digraph is
/// padded to half-order max(p, q) with isolated vertices.
BipartiteDigraph build_complete(int p, int q);

/// x_i -> y_i -> x_{i+1 mod a}.
BipartiteDigraph build_directed_cycle(int a);

// Isomorphism.

/// Vertex bijection: x_i maps to image(x_i), with parts exchanged when `swap`.
struct Isomorphism {
  bool swap = false;
  std::vector<int> x_image;  // index of the image of x_i within its target part
  std::vector<int> y_image;

  Vertex image(Vertex v) const;
  std::string to_text() const;  // "x0->y3 x1->y0 ..."
};

/// The digraph obtained by renaming every vertex v of d to iso.image(v).
BipartiteDigraph relabel(const BipartiteDigraph& d, const Isomorphism& iso);

/// True when iso maps the arc set of `from` exactly onto that of `to`.
bool is_isomorphism(const BipartiteDigraph& from, const BipartiteDigraph& to, const Isomorphism& iso);

/// Backtracking matcher over X-row assignments (with and without the part
/// swap); columns are matched by multiset of partial column vectors.
std::optional<Isomorphism> find_isomorphism(const BipartiteDigraph& d1, const BipartiteDigraph& d2);
bool are_isomorphic(const BipartiteDigraph& d1, const BipartiteDigraph& d2);

// Canonical forms.

inline constexpr int kExactCanonMaxHalfOrder = 7;

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  // False above kExactCanonMaxHalfOrder, where the search is budgeted and
  // equal digraphs may in rare cases get different forms.
  bool exact = true;

  std::string hex() const;
  friend bool operator==(const CanonicalForm& l, const CanonicalForm& r) { return l.bytes == r.bytes; }
  friend auto operator<=>(const CanonicalForm& l, const CanonicalForm& r) { return l.bytes <=> r.bytes; }
};

/// Least serialization (half-order byte, then a*a arc codes row-major) over
/// all relabelings that respect an iterated degree-refinement colouring,
/// taken over both part orientations.
CanonicalForm canonical_form(const BipartiteDigraph& d);

}  // namespace bbd
