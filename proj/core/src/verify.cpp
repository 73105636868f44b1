#include "bbd/verify.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"

namespace bbd {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T12: return "t12";
    case TheoremId::T13: return "t13";
    case TheoremId::T14: return "t14";
    case TheoremId::T15: return "t15";
    case TheoremId::T16: return "t16";
    case TheoremId::COR: return "cor";
  }
  return "?";
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids = {TheoremId::T12, TheoremId::T13, TheoremId::T14,
                                             TheoremId::T15, TheoremId::T16, TheoremId::COR};
  return ids;
}

TheoremId parse_theorem_id(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (auto id : all_theorems())
    if (lower == to_string(id)) return id;
  throw std::invalid_argument("unknown theorem id '" + std::string(text) + "'");
}

std::string hypothesis_kind(std::string_view failure) {
  return std::string(failure.substr(0, failure.find('(')));
}

namespace {

std::string pair_failure(std::string_view kind, const DominatingPair& p) {
  return std::string(kind) + "_by_pair(" + p.u.name() + "," + p.v.name() + ")";
}

// Collects hypothesis failures in the order they are checked.
struct Hypotheses {
  std::vector<std::string> failed;

  void require(bool ok, std::string_view name) {
    if (!ok) failed.emplace_back(name);
  }
  void require_bk(const BipartiteDigraph& d, int k) {
    if (auto p = bk_violation(d, k)) failed.push_back(pair_failure("b" + std::to_string(k) + "_violated", *p));
  }
};

TheoremVerdict start(TheoremId id, Hypotheses&& h) {
  TheoremVerdict v;
  v.theorem = id;
  v.failed_hypotheses = std::move(h.failed);
  v.hypotheses_met = v.failed_hypotheses.empty();
  return v;
}

void conclude(TheoremVerdict& v, bool main_branch, bool escape, std::string_view escape_name) {
  v.conclusion_holds = main_branch || escape;
  if (!main_branch && escape) v.escape_clause = std::string(escape_name);
  v.counterexample = !*v.conclusion_holds;
}

}  // namespace

TheoremVerdict verify_t12(const BipartiteDigraph& d) {
  Hypotheses h;
  h.require(is_strong(d), "not_strong");
  if (auto p = wang_violation(d)) h.failed.push_back(pair_failure("wang_violated", *p));
  auto v = start(TheoremId::T12, std::move(h));
  if (!v.hypotheses_met) return v;
  v.witness = find_cycle_of_length(d, d.order());
  conclude(v, v.witness.has_value(), false, "");
  return v;
}

TheoremVerdict verify_t13(const BipartiteDigraph& d) {
  Hypotheses h;
  h.require(d.half_order() >= 4, "order_too_small");
  h.require(is_strong(d), "not_strong");
  h.require_bk(d, 1);
  auto v = start(TheoremId::T13, std::move(h));
  if (!v.hypotheses_met) return v;
  v.witness = find_cycle_of_length(d, d.order());
  bool escape = !v.witness && are_isomorphic(d, build_d8());
  conclude(v, v.witness.has_value(), escape, "isomorphic to D(8)");
  return v;
}

TheoremVerdict verify_t14(const BipartiteDigraph& d) {
  const int a = d.half_order();
  Hypotheses h;
  h.require(d.order() >= 8, "order_too_small");
  h.require(is_strong(d), "not_strong");
  h.require(!are_isomorphic(d, build_directed_cycle(a)), "is_directed_cycle");
  h.require_bk(d, 1);
  auto v = start(TheoremId::T14, std::move(h));
  if (!v.hypotheses_met) return v;
  auto spec = cycle_spectrum(d);
  v.spectrum = spec.lengths();
  bool full = spec.covers(2, d.order());
  bool escape = !full && are_isomorphic(d, build_d8());
  conclude(v, full, escape, "isomorphic to D(8)");
  return v;
}

TheoremVerdict verify_t15(const BipartiteDigraph& d) {
  Hypotheses h;
  h.require(d.order() >= 8, "order_too_small");
  h.require(is_strong(d), "not_strong");
  h.require_bk(d, 0);
  auto pre = d.half_order() >= 2 ? find_cycle_of_length(d, d.order() - 2) : std::nullopt;
  h.require(pre.has_value(), "no_pre_hamiltonian");
  auto v = start(TheoremId::T15, std::move(h));
  if (!v.hypotheses_met) return v;
  auto spec = cycle_spectrum(d);
  v.spectrum = spec.lengths();
  conclude(v, spec.covers(2, d.order() - 2), false, "");
  return v;
}

TheoremVerdict verify_t16(const BipartiteDigraph& d) {
  Hypotheses h;
  h.require(d.order() >= 10, "order_too_small");
  h.require(is_strong(d), "not_strong");
  h.require(!is_underlying_2connected(d), "underlying_2connected");
  h.require_bk(d, 0);
  auto v = start(TheoremId::T16, std::move(h));
  if (!v.hypotheses_met) return v;
  v.witness = find_cycle_of_length(d, d.order() - 2);
  bool escape = !v.witness && are_isomorphic(d, build_d10());
  conclude(v, v.witness.has_value(), escape, "isomorphic to D(10)");
  return v;
}

TheoremVerdict verify_cor(const BipartiteDigraph& d) {
  Hypotheses h;
  h.require(d.order() >= 8, "order_too_small");
  h.require(is_strong(d), "not_strong");
  h.require(!is_underlying_2connected(d), "underlying_2connected");
  if (auto p = sum_condition_violation(d)) h.failed.push_back(pair_failure("sum_condition_violated", *p));
  auto v = start(TheoremId::COR, std::move(h));
  v.note = "cycle lengths read as 2k for k in [1, a-1]; odd lengths cannot occur in a bipartite digraph";
  if (!v.hypotheses_met) return v;
  auto spec = cycle_spectrum(d);
  v.spectrum = spec.lengths();
  bool covered = spec.covers(2, d.order() - 2);
  bool escape = !covered && are_isomorphic(d, build_d10());
  conclude(v, covered, escape, "isomorphic to D(10)");
  return v;
}

TheoremVerdict verify(TheoremId id, const BipartiteDigraph& d) {
  switch (id) {
    case TheoremId::T12: return verify_t12(d);
    case TheoremId::T13: return verify_t13(d);
    case TheoremId::T14: return verify_t14(d);
    case TheoremId::T15: return verify_t15(d);
    case TheoremId::T16: return verify_t16(d);
    case TheoremId::COR: return verify_cor(d);
  }
  throw std::invalid_argument("unknown theorem");
}

}  // namespace bbd
