#include "bbd/cycles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "bbd/analysis.hpp"

namespace bbd {

namespace {

// Depth-first extension of alternating paths from a fixed start vertex.
// The start is the least vertex on the cycle, so only larger ids are
// admissible, which removes rotational duplicates. Neighbours are tried in
// increasing id order, so the first cycle found is the lexicographically
// least one through this start. The search stays inside `region`.
class ExactCycleSearch {
 public:
  ExactCycleSearch(const GlobalAdjacency& g, int length, std::uint64_t region)
      : g_(g), length_(length), region_(region) {
    path_.reserve(length);
  }

  bool run_from(int start) {
    start_ = start;
    allowed_ = region_ & ~((2ull << start) - 1);
    // Cheap exits: start needs an out- and in-neighbour above it.
    if (!(g_.out[start] & allowed_) || !(g_.in[start] & allowed_)) return false;
    path_.assign(1, start);
    return extend(start, 1ull << start);
  }

  const std::vector<int>& path() const { return path_; }

 private:
  bool extend(int cur, std::uint64_t used) {
    const int depth = static_cast<int>(path_.size());
    if (depth == length_) return (g_.out[cur] >> start_) & 1u;

    auto free = allowed_ & ~used;
    // Remaining slots alternate parts starting opposite to cur.
    const int remaining = length_ - depth;
    const bool cur_is_x = (cur & 1) == 0;
    const int need_opp = (remaining + 1) / 2;
    const int need_same = remaining / 2;
    auto opp_mask = cur_is_x ? g_.y_mask() : g_.x_mask();
    auto same_mask = cur_is_x ? g_.x_mask() : g_.y_mask();
    if (std::popcount(free & opp_mask) < need_opp || std::popcount(free & same_mask) < need_same)
      return false;

    auto cand = g_.out[cur] & free;
    if (remaining == 1) cand &= g_.in[start_];  // last vertex must close the cycle
    for (; cand; cand &= cand - 1) {
      int next = std::countr_zero(cand);
      path_.push_back(next);
      if (extend(next, used | (1ull << next))) return true;
      path_.pop_back();
    }
    return false;
  }

  const GlobalAdjacency& g_;
  int length_;
  std::uint64_t region_;
  int start_ = 0;
  std::uint64_t allowed_ = 0;
  std::vector<int> path_;
};

}  // namespace

bool validate_witness(const BipartiteDigraph& d, const CycleWitness& w) {
  const int len = w.length();
  if (len < 2 || len % 2 != 0 || len > d.order()) return false;
  std::uint64_t seen = 0;
  for (int i = 0; i < len; ++i) {
    const auto& v = w.vertices[i];
    if (!d.contains(v)) return false;
    if ((seen >> v.id()) & 1u) return false;
    seen |= 1ull << v.id();
    const auto& next = w.vertices[(i + 1) % len];
    if (v.part == next.part || !d.has_arc(v, next)) return false;
  }
  return true;
}

std::optional<CycleWitness> find_cycle_of_length(const BipartiteDigraph& d, int length) {
  if (length < 2 || length % 2 != 0 || length > d.order()) return std::nullopt;
  GlobalAdjacency g(d);
  // Each cycle lies in one block, so search blocks separately and keep the
  // least witness. Blocks with fewer than `length` vertices are skipped.
  std::optional<std::vector<int>> best;
  for (const auto& block : blocks(d)) {
    std::uint64_t region = 0;
    for (auto v : block.members()) region |= 1ull << v.id();
    if (std::popcount(region) < length) continue;
    ExactCycleSearch search(g, length, region);
    for (auto m = region; m; m &= m - 1) {
      const int start = std::countr_zero(m);
      if (best && start > best->front()) break;
      if (std::popcount(m) < length) break;
      if (!search.run_from(start)) continue;
      if (!best || search.path() < *best) best = search.path();
      break;
    }
  }
  if (!best) return std::nullopt;
  CycleWitness w;
  for (int id : *best) w.vertices.push_back(Vertex::from_id(id));
  return w;
}

bool has_cycle_of_length(const BipartiteDigraph& d, int length) {
  return find_cycle_of_length(d, length).has_value();
}

bool is_hamiltonian(const BipartiteDigraph& d) { return has_cycle_of_length(d, d.order()); }

bool has_pre_hamiltonian(const BipartiteDigraph& d) {
  return d.half_order() >= 2 && has_cycle_of_length(d, d.order() - 2);
}

std::vector<int> Spectrum::lengths() const {
  std::vector<int> out;
  for (const auto& w : witnesses) out.push_back(w.length());
  return out;
}

bool Spectrum::contains(int length) const {
  return std::any_of(witnesses.begin(), witnesses.end(),
                     [length](const CycleWitness& w) { return w.length() == length; });
}

bool Spectrum::covers(int lo, int hi) const {
  for (int len = lo + (lo % 2 != 0); len <= hi; len += 2)
    if (!contains(len)) return false;
  return true;
}

Spectrum cycle_spectrum(const BipartiteDigraph& d) {
  Spectrum s;
  for (int len = 2; len <= d.order(); len += 2)
    if (auto w = find_cycle_of_length(d, len)) s.witnesses.push_back(std::move(*w));
  return s;
}

bool brute_oracle_has_cycle(const BipartiteDigraph& d, int length) {
  const int n = d.order();
  if (n > kOracleMaxOrder)
    throw DigraphError("brute-force oracle limited to order " + std::to_string(kOracleMaxOrder));
  if (length < 2 || length > n) return false;

  std::vector<Vertex> all;
  for (int i = 0; i < d.half_order(); ++i) {
    all.push_back(x(i));
    all.push_back(y(i));
  }
  auto is_cycle = [&](const std::vector<Vertex>& seq) {
    for (int i = 0; i < length; ++i)
      if (!d.has_arc(seq[i], seq[(i + 1) % length])) return false;
    return true;
  };

  // Sequences of `length` distinct vertices whose first element is the
  // minimum (kills rotations) and whose second element precedes the last
  // (kills reflections; both orientations are then tested explicitly).
  std::vector<Vertex> seq(length);
  std::vector<bool> used(n, false);
  std::function<bool(int)> place = [&](int pos) -> bool {
    if (pos == length) {
      if (length > 2 && !(seq[1].id() < seq[length - 1].id())) return false;
      if (is_cycle(seq)) return true;
      std::vector<Vertex> rev(seq.rbegin(), seq.rend());
      return is_cycle(rev);
    }
    for (int id = 0; id < n; ++id) {
      if (used[id]) continue;
      if (pos > 0 && id < seq[0].id()) continue;
      used[id] = true;
      seq[pos] = all[id];
      bool found = place(pos + 1);
      used[id] = false;
      if (found) return true;
    }
    return false;
  };
  return place(0);
}

}  // namespace bbd
