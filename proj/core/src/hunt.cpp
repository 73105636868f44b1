#include "bbd/hunt.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"

namespace bbd {

std::string_view to_string(GenMode mode) {
  switch (mode) {
    case GenMode::Random: return "random";
    case GenMode::Structured: return "structured";
    case GenMode::Exhaustive: return "exhaustive";
  }
  return "?";
}

GenMode parse_gen_mode(std::string_view text) {
  for (auto m : {GenMode::Random, GenMode::Structured, GenMode::Exhaustive})
    if (text == to_string(m)) return m;
  throw std::invalid_argument("unknown generator mode '" + std::string(text) + "'");
}

void GenSpec::validate() const {
  if (half_order < 1 || half_order > kMaxHalfOrder)
    throw std::invalid_argument("half-order must be in [1, " + std::to_string(kMaxHalfOrder) + "]");
  if (!(arc_density >= 0.0 && arc_density <= 1.0))
    throw std::invalid_argument("arc density must be in [0, 1]");
  if (count < 1) throw std::invalid_argument("count must be at least 1");
  if (mode == GenMode::Exhaustive && half_order > kExhaustiveMaxHalfOrder)
    throw std::invalid_argument("exhaustive mode requires a <= " + std::to_string(kExhaustiveMaxHalfOrder));
  if (mode == GenMode::Structured && half_order < 3)
    throw std::invalid_argument("structured mode requires a >= 3");
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t index)
    : engine_(splitmix64(seed ^ splitmix64(index))) {}

std::uint64_t InstanceRng::below(std::uint64_t n) {
  const std::uint64_t limit = ~0ull - (~0ull % n);
  std::uint64_t v;
  do v = engine_(); while (v >= limit);
  return v % n;
}

BipartiteDigraph gen_random(const GenSpec& spec, std::uint64_t index) {
  InstanceRng rng(spec.seed, index);
  const int a = spec.half_order;
  DigraphBuilder b(a);
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < a; ++j) {
      if (rng.bernoulli(spec.arc_density)) b.add_arc(x(i), y(j));
      if (rng.bernoulli(spec.arc_density)) b.add_arc(y(j), x(i));
    }
  }
  return b.build();
}

namespace {

struct Arc {
  Vertex from;
  Vertex to;
};

class StructuredInstance {
 public:
  StructuredInstance(const GenSpec& spec, std::uint64_t index)
      : a_(spec.half_order), rng_(spec.seed, index), builder_(spec.half_order) {
    const Part u_part = rng_.bernoulli(0.5) ? Part::X : Part::Y;
    u_ = Vertex{u_part, static_cast<int>(rng_.below(a_))};
    // A lone B vertex on u's own side could never be joined to anything.
    // With |B| = 2 the pair is one vertex per part, the opposite-side one
    // hanging off u.
    small_.insert(Vertex{opposite(u_part), static_cast<int>(rng_.below(a_))});
    if (rng_.below(2) == 1) {
      int k = static_cast<int>(rng_.below(a_ - 1));
      if (k >= u_.index) ++k;
      small_.insert(Vertex{u_part, k});
    }
    for (auto v : VertexSet::full(a_).members())
      if (!(v == u_) && !small_.contains(v)) big_.insert(v);

    for (auto& arc : admissible())
      if (rng_.bernoulli(spec.arc_density)) builder_.add_arc(arc.from, arc.to);
  }

  std::optional<BipartiteDigraph> repair_and_check() {
    for (int added = 0; added < 4 * a_; ++added) {
      const auto& d = builder_.peek();
      std::optional<Arc> fix;
      if (!is_strong(d))
        fix = strong_fix(d);
      else if (auto p = bk_violation(d, 0))
        fix = degree_fix(d, *p);
      else
        break;
      if (!fix) return std::nullopt;
      builder_.add_arc(fix->from, fix->to);
    }
    auto d = builder_.build();
    if (!is_strong(d) || !satisfies_bk(d, 0) || is_underlying_2connected(d)) return std::nullopt;
    return d;
  }

 private:
  bool allowed(Vertex p, Vertex q) const {
    if (p.part == q.part) return false;
    return !((big_.contains(p) && small_.contains(q)) || (small_.contains(p) && big_.contains(q)));
  }

  // Directed arcs the separation permits, in a fixed order.
  std::vector<Arc> admissible() const {
    std::vector<Arc> out;
    for (int i = 0; i < a_; ++i)
      for (int j = 0; j < a_; ++j) {
        if (!allowed(x(i), y(j))) continue;
        out.push_back({x(i), y(j)});
        out.push_back({y(j), x(i)});
      }
    return out;
  }

  std::optional<Arc> pick(std::vector<Arc>& candidates) {
    if (candidates.empty()) return std::nullopt;
    return candidates[rng_.below(candidates.size())];
  }

  // Adds an arc that grows the set reachable from u, or else the set that
  // reaches u.
  std::optional<Arc> strong_fix(const BipartiteDigraph& d) {
    GlobalAdjacency g(d);
    auto reach = [&](const auto& step) {
      std::uint64_t seen = 1ull << u_.id(), frontier = seen;
      while (frontier) {
        std::uint64_t next = 0;
        for (auto m = frontier; m; m &= m - 1) next |= step[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= next;
      }
      return seen;
    };
    const auto from_u = reach(g.out);
    const auto to_u = reach(g.in);
    std::vector<Arc> candidates;
    if (from_u != g.all()) {
      for (auto& arc : admissible())
        if (((from_u >> arc.from.id()) & 1u) && !((from_u >> arc.to.id()) & 1u) && !d.has_arc(arc.from, arc.to))
          candidates.push_back(arc);
    } else {
      for (auto& arc : admissible())
        if (!((to_u >> arc.from.id()) & 1u) && ((to_u >> arc.to.id()) & 1u) && !d.has_arc(arc.from, arc.to))
          candidates.push_back(arc);
    }
    return pick(candidates);
  }

  // Adds an arc at the higher-degree member of the violating pair (the one
  // closer to 2a-2), falling back to the other when it has no room left.
  std::optional<Arc> degree_fix(const BipartiteDigraph& d, const DominatingPair& p) {
    std::vector<Vertex> members = {p.u, p.v};
    std::stable_sort(members.begin(), members.end(), [&](Vertex l, Vertex r) {
      return d.degree(l).total > d.degree(r).total;
    });
    for (auto v : members) {
      std::vector<Arc> candidates;
      for (auto& arc : admissible())
        if ((arc.from == v || arc.to == v) && !d.has_arc(arc.from, arc.to)) candidates.push_back(arc);
      if (auto arc = pick(candidates)) return arc;
    }
    return std::nullopt;
  }

  int a_;
  InstanceRng rng_;
  DigraphBuilder builder_;
  Vertex u_;
  VertexSet small_;  // B
  VertexSet big_;    // A
};

}  // namespace

std::optional<BipartiteDigraph> gen_structured(const GenSpec& spec, std::uint64_t index) {
  StructuredInstance inst(spec, index);
  return inst.repair_and_check();
}

std::uint64_t labeled_count(int a) {
  if (a < 1 || a > kExhaustiveMaxHalfOrder)
    throw std::invalid_argument("labeled enumeration requires 1 <= a <= " +
                                std::to_string(kExhaustiveMaxHalfOrder));
  return 1ull << (2 * a * a);
}

BipartiteDigraph decode_labeled(int a, std::uint64_t code) {
  DigraphBuilder b(a);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j) {
      int shift = 2 * (i * a + j);
      b.set_code(i, j, static_cast<ArcCode>((code >> shift) & 3u));
    }
  return b.build();
}

std::vector<BipartiteDigraph> enumerate_all(int a, const std::function<bool(const BipartiteDigraph&)>& filter,
                                            bool dedup) {
  const auto total = labeled_count(a);
  std::vector<BipartiteDigraph> out;
  std::set<CanonicalForm> seen;
  for (std::uint64_t code = 0; code < total; ++code) {
    auto d = decode_labeled(a, code);
    if (filter && !filter(d)) continue;
    if (dedup && !seen.insert(canonical_form(d)).second) continue;
    out.push_back(std::move(d));
  }
  return out;
}

std::optional<BipartiteDigraph> generate(const GenSpec& spec, std::uint64_t index) {
  switch (spec.mode) {
    case GenMode::Random: return gen_random(spec, index);
    case GenMode::Structured: return gen_structured(spec, index);
    case GenMode::Exhaustive: return decode_labeled(spec.half_order, index);
  }
  return std::nullopt;
}

namespace {

struct Outcome {
  bool emitted = false;
  std::string rejection;  // empty when hypotheses are met
  std::optional<Counterexample> counterexample;
  CanonicalForm form;
};

Outcome evaluate(TheoremId theorem, const GenSpec& spec, std::uint64_t index) {
  Outcome o;
  auto d = generate(spec, index);
  if (!d) return o;
  o.emitted = true;
  o.form = canonical_form(*d);
  auto verdict = verify(theorem, *d);
  if (!verdict.hypotheses_met) {
    o.rejection = hypothesis_kind(verdict.failed_hypotheses.front());
  } else if (verdict.counterexample) {
    o.counterexample = Counterexample{index, serialize(*d), std::move(verdict)};
  }
  return o;
}

}  // namespace

HuntReport hunt_counterexamples(TheoremId theorem, const GenSpec& spec, int workers) {
  spec.validate();
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t total = static_cast<std::uint64_t>(spec.count);
  if (spec.mode == GenMode::Exhaustive) total = std::min(total, labeled_count(spec.half_order));
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::min<std::uint64_t>(total, 256))));

  // Contiguous index blocks per worker; results land in index order.
  std::vector<Outcome> outcomes(total);
  auto run_block = [&](std::uint64_t lo, std::uint64_t hi) {
    for (auto i = lo; i < hi; ++i) outcomes[i] = evaluate(theorem, spec, i);
  };
  if (workers == 1) {
    run_block(0, total);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      auto lo = std::min<std::uint64_t>(total, w * chunk);
      auto hi = std::min<std::uint64_t>(total, lo + chunk);
      pool.emplace_back(run_block, lo, hi);
    }
    for (auto& t : pool) t.join();
  }

  HuntReport r;
  r.theorem = theorem;
  r.spec = spec;
  std::set<CanonicalForm> forms;
  for (auto& o : outcomes) {
    if (!o.emitted) {
      ++r.discarded;
      continue;
    }
    ++r.tested;
    forms.insert(std::move(o.form));
    if (!o.rejection.empty()) {
      ++r.rejections[o.rejection];
      continue;
    }
    ++r.hypotheses_met;
    if (o.counterexample) r.counterexamples.push_back(std::move(*o.counterexample));
  }
  r.distinct_canonical_forms = static_cast<std::int64_t>(forms.size());
  r.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace bbd
