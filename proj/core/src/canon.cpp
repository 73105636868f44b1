#include "bbd/canon.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace bbd {

BipartiteDigraph build_d10() {
  DigraphBuilder b(5);
  add_complete(b, {1, 2, 3}, {0, 1});
  for (int i = 1; i <= 3; ++i)
    for (int j = 2; j <= 4; ++j) b.add_arc(x(i), y(j));
  b.add_two_cycle(x(4), y(1));
  b.add_two_cycle(x(0), y(0));
  for (int i = 1; i <= 3; ++i) b.add_two_cycle(x(i), y(i + 1));
  return b.build();
}

BipartiteDigraph build_d8() {
  DigraphBuilder b(4);
  add_complete(b, {1, 2}, {1, 2, 3});
  b.add_two_cycle(x(0), y(0));
  b.add_two_cycle(x(0), y(1));
  b.add_two_cycle(x(3), y(3));
  return b.build();
}

BipartiteDigraph build_complete(int p, int q) {
  if (p < 1 || q < 1) throw DigraphError("build_complete: part sizes must be positive");
  DigraphBuilder b(std::max(p, q));
  std::vector<int> xs(p), ys(q);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  add_complete(b, xs, ys);
  return b.build();
}

BipartiteDigraph build_directed_cycle(int a) {
  DigraphBuilder b(a);
  for (int i = 0; i < a; ++i) {
    b.add_arc(x(i), y(i));
    b.add_arc(y(i), x((i + 1) % a));
  }
  return b.build();
}

Vertex Isomorphism::image(Vertex v) const {
  const auto& img = v.part == Part::X ? x_image : y_image;
  Part p = swap ? opposite(v.part) : v.part;
  return Vertex{p, img.at(v.index)};
}

std::string Isomorphism::to_text() const {
  std::string out;
  for (Part p : {Part::X, Part::Y}) {
    const auto& img = p == Part::X ? x_image : y_image;
    for (int i = 0; i < static_cast<int>(img.size()); ++i) {
      if (!out.empty()) out.push_back(' ');
      Vertex v{p, i};
      out += v.name() + "->" + image(v).name();
    }
  }
  return out;
}

BipartiteDigraph relabel(const BipartiteDigraph& d, const Isomorphism& iso) {
  DigraphBuilder b(d.half_order());
  for (int i = 0; i < d.half_order(); ++i) {
    for (int j = 0; j < d.half_order(); ++j) {
      if (d.has_arc(x(i), y(j))) b.add_arc(iso.image(x(i)), iso.image(y(j)));
      if (d.has_arc(y(j), x(i))) b.add_arc(iso.image(y(j)), iso.image(x(i)));
    }
  }
  return b.build();
}

bool is_isomorphism(const BipartiteDigraph& from, const BipartiteDigraph& to, const Isomorphism& iso) {
  const int a = from.half_order();
  if (to.half_order() != a) return false;
  if (static_cast<int>(iso.x_image.size()) != a || static_cast<int>(iso.y_image.size()) != a)
    return false;
  for (const auto* img : {&iso.x_image, &iso.y_image}) {
    std::vector<int> sorted = *img;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < a; ++i)
      if (sorted[i] != i) return false;
  }
  return from.arc_count() == to.arc_count() && relabel(from, iso) == to;
}

namespace {

// Matches rows of `d1` (x vertices) onto rows of `target` one at a time,
// keeping the multisets of partial column vectors equal.
class RowMatcher {
 public:
  RowMatcher(const BipartiteDigraph& d1, const BipartiteDigraph& target)
      : d1_(d1), t_(target), a_(d1.half_order()), row_image_(a_, -1), used_(a_, false),
        keys1_(a_, 0), keys_t_(a_, 0) {}

  bool run() { return assign(0); }

  std::vector<int> rows() const { return row_image_; }

  // Column bijection consistent with the finished row assignment.
  std::vector<int> columns() const {
    std::vector<int> col_image(a_, -1);
    std::vector<bool> taken(a_, false);
    for (int j = 0; j < a_; ++j) {
      for (int k = 0; k < a_; ++k) {
        if (!taken[k] && keys1_[j] == keys_t_[k]) {
          col_image[j] = k;
          taken[k] = true;
          break;
        }
      }
    }
    return col_image;
  }

 private:
  bool assign(int i) {
    if (i == a_) return true;
    auto deg = d1_.degree(x(i));
    for (int k = 0; k < a_; ++k) {
      if (used_[k] || !(t_.degree(x(k)) == deg)) continue;
      auto saved1 = keys1_;
      auto saved_t = keys_t_;
      for (int j = 0; j < a_; ++j) {
        keys1_[j] = (keys1_[j] << 2) | static_cast<std::uint64_t>(d1_.code(i, j));
        keys_t_[j] = (keys_t_[j] << 2) | static_cast<std::uint64_t>(t_.code(k, j));
      }
      auto s1 = keys1_;
      auto st = keys_t_;
      std::sort(s1.begin(), s1.end());
      std::sort(st.begin(), st.end());
      if (s1 == st) {
        used_[k] = true;
        row_image_[i] = k;
        if (assign(i + 1)) return true;
        used_[k] = false;
        row_image_[i] = -1;
      }
      keys1_ = std::move(saved1);
      keys_t_ = std::move(saved_t);
    }
    return false;
  }

  const BipartiteDigraph& d1_;
  const BipartiteDigraph& t_;
  int a_;
  std::vector<int> row_image_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> keys1_;  // column j of d1 over assigned rows
  std::vector<std::uint64_t> keys_t_;
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const BipartiteDigraph& d1, const BipartiteDigraph& d2) {
  if (d1.half_order() != d2.half_order() || d1.arc_count() != d2.arc_count()) return std::nullopt;
  for (bool swap : {false, true}) {
    auto target = swap ? d2.swapped() : d2;
    RowMatcher m(d1, target);
    if (!m.run()) continue;
    Isomorphism iso;
    iso.swap = swap;
    iso.x_image = m.rows();
    iso.y_image = m.columns();
    return iso;
  }
  return std::nullopt;
}

bool are_isomorphic(const BipartiteDigraph& d1, const BipartiteDigraph& d2) {
  return find_isomorphism(d1, d2).has_value();
}

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * bytes.size());
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

namespace {

// Colour refinement on global ids, blind to part labels so that colours are
// preserved by part-swapping isomorphisms too.
std::vector<int> refine_colours(const BipartiteDigraph& d) {
  GlobalAdjacency g(d);
  const int n = g.n;
  std::vector<int> colour(n);
  {
    std::map<std::pair<int, int>, int> rank;
    for (int v = 0; v < n; ++v) rank[{std::popcount(g.out[v]), std::popcount(g.in[v])}] = 0;
    int r = 0;
    for (auto& [k, val] : rank) val = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[{std::popcount(g.out[v]), std::popcount(g.in[v])}];
  }
  int classes = 0;
  while (true) {
    std::vector<std::pair<int, std::vector<int>>> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = colour[v];
      for (auto m = g.out[v] | g.in[v]; m; m &= m - 1) {
        int w = std::countr_zero(m);
        int rel = static_cast<int>((g.out[v] >> w) & 1u) | static_cast<int>(((g.in[v] >> w) & 1u) << 1);
        sig[v].second.push_back(colour[w] * 4 + rel);
      }
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<std::pair<int, std::vector<int>>, int> rank;
    for (auto& s : sig) rank[s] = 0;
    int r = 0;
    for (auto& [k, val] : rank) val = r++;
    for (int v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (r == classes) break;
    classes = r;
  }
  return colour;
}

// Least row-major matrix over row orders that respect the colour cells.
// Given a row order the best column order sorts columns by their vectors,
// so the first k rows of any completion are fixed once those rows are
// chosen. That makes prefix comparison a sound bound.
class LeastMatrixSearch {
 public:
  LeastMatrixSearch(std::vector<std::vector<std::uint8_t>> rows, std::vector<int> row_colour,
                    long budget)
      : rows_(std::move(rows)), a_(static_cast<int>(rows_.size())), budget_(budget) {
    order_.resize(a_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](int l, int r) { return row_colour[l] < row_colour[r]; });
    for (int r : order_) slot_colour_.push_back(row_colour[r]);
    colour_ = std::move(row_colour);
    used_.assign(a_, false);
    cur_.assign(a_, std::vector<std::uint8_t>(a_, 0));
  }

  // Returns false if the node budget ran out before the search finished.
  bool run(std::vector<std::uint8_t>& best) {
    best_ = &best;
    std::vector<std::uint64_t> keys(a_, 0);
    descend(0, keys);
    return !exhausted_;
  }

 private:
  void descend(int k, const std::vector<std::uint64_t>& keys) {
    if (k == a_) {
      std::vector<std::uint8_t> flat;
      flat.reserve(a_ * a_);
      for (auto& row : cur_) flat.insert(flat.end(), row.begin(), row.end());
      if (best_->empty() || flat < *best_) *best_ = std::move(flat);
      return;
    }
    for (int r = 0; r < a_; ++r) {
      if (used_[r] || colour_[r] != slot_colour_[k]) continue;
      if (budget_ >= 0 && budget_-- == 0) {
        exhausted_ = true;
        return;
      }
      // Keys stay indexed by original column; only the emitted row is sorted.
      std::vector<std::uint64_t> next(a_);
      for (int j = 0; j < a_; ++j) next[j] = (keys[j] << 2) | rows_[r][j];
      auto sorted = next;
      std::sort(sorted.begin(), sorted.end());
      for (int j = 0; j < a_; ++j) cur_[k][j] = static_cast<std::uint8_t>(sorted[j] & 3u);
      if (!best_->empty()) {
        auto cmp = compare_prefix(k);
        if (cmp > 0) continue;
      }
      used_[r] = true;
      descend(k + 1, next);
      used_[r] = false;
      if (exhausted_) return;
    }
  }

  int compare_prefix(int k) const {
    for (int t = 0; t <= k; ++t)
      for (int j = 0; j < a_; ++j) {
        auto b = (*best_)[t * a_ + j];
        if (cur_[t][j] != b) return cur_[t][j] < b ? -1 : 1;
      }
    return 0;
  }

  std::vector<std::vector<std::uint8_t>> rows_;
  int a_;
  long budget_;
  bool exhausted_ = false;
  std::vector<int> order_;
  std::vector<int> slot_colour_;
  std::vector<int> colour_;
  std::vector<bool> used_;
  std::vector<std::vector<std::uint8_t>> cur_;
  std::vector<std::uint8_t>* best_ = nullptr;
};

constexpr long kHeuristicNodeBudget = 200000;

}  // namespace

CanonicalForm canonical_form(const BipartiteDigraph& d) {
  const int a = d.half_order();
  const bool exact = a <= kExactCanonMaxHalfOrder;
  auto colour = refine_colours(d);

  CanonicalForm form;
  form.exact = exact;
  std::vector<std::uint8_t> overall;
  for (Part rows_part : {Part::X, Part::Y}) {
    std::vector<std::vector<std::uint8_t>> rows(a, std::vector<std::uint8_t>(a));
    std::vector<int> row_colour(a);
    for (int i = 0; i < a; ++i) {
      Vertex r{rows_part, i};
      row_colour[i] = colour[r.id()];
      for (int j = 0; j < a; ++j) {
        Vertex c{opposite(rows_part), j};
        rows[i][j] = static_cast<std::uint8_t>(static_cast<int>(d.has_arc(r, c)) |
                                               (static_cast<int>(d.has_arc(c, r)) << 1));
      }
    }
    std::vector<std::uint8_t> best;
    LeastMatrixSearch search(std::move(rows), std::move(row_colour),
                             exact ? -1 : kHeuristicNodeBudget);
    search.run(best);
    if (overall.empty() || best < overall) overall = std::move(best);
  }
  form.bytes.push_back(static_cast<std::uint8_t>(a));
  form.bytes.insert(form.bytes.end(), overall.begin(), overall.end());
  return form;
}

}  // namespace bbd
