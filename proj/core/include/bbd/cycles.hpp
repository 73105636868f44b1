#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbd/digraph.hpp"

namespace bbd {

/// Closed directed cycle v1 -> v2 -> ... -> vL -> v1.
struct CycleWitness {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  std::string to_text() const { return format_vertices(vertices); }
  static CycleWitness from_text(std::string_view text) { return {parse_vertices(text)}; }

  friend bool operator==(const CycleWitness&, const CycleWitness&) = default;
};

/// Distinct vertices, even length in [2, 2a], alternating parts, every
/// consecutive arc present including the closing one.
bool validate_witness(const BipartiteDigraph& d, const CycleWitness& w);

/// The lexicographically least cycle of exactly `length` vertices under
/// x0 < y0 < x1 < y1 < ..., written from its least vertex. None for odd or
/// out-of-range lengths.
std::optional<CycleWitness> find_cycle_of_length(const BipartiteDigraph& d, int length);
bool has_cycle_of_length(const BipartiteDigraph& d, int length);

bool is_hamiltonian(const BipartiteDigraph& d);
/// Cycle through all but two vertices (length 2a-2). False when a < 2.
bool has_pre_hamiltonian(const BipartiteDigraph& d);

/// Even cycle lengths present, increasing, with one witness per length.
struct Spectrum {
  std::vector<CycleWitness> witnesses;

  std::vector<int> lengths() const;
  bool contains(int length) const;
  /// True when every even length in [lo, hi] is present.
  bool covers(int lo, int hi) const;
};

Spectrum cycle_spectrum(const BipartiteDigraph& d);

/// Exhaustive check by enumerating vertex sequences; only for 2a <= 12.
/// Kept free of the search engine's pruning so it can cross-check it.
/// Throws DigraphError above the guard.
bool brute_oracle_has_cycle(const BipartiteDigraph& d, int length);

inline constexpr int kOracleMaxOrder = 12;

}  // namespace bbd
