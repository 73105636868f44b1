#include "bbd/json_io.hpp"

#include "json.hpp"

namespace bbd {

namespace {

using Json = nlohmann::ordered_json;

Json names(const std::vector<Vertex>& vs) {
  Json arr = Json::array();
  for (const auto& v : vs) arr.push_back(v.name());
  return arr;
}

Json verdict_json(const TheoremVerdict& v) {
  Json j;
  j["theorem"] = std::string(to_string(v.theorem));
  j["hypotheses_met"] = v.hypotheses_met;
  j["failed_hypotheses"] = v.failed_hypotheses;
  j["conclusion_holds"] = v.conclusion_holds ? Json(*v.conclusion_holds) : Json("not_evaluated");
  j["escape_clause"] = v.escape_clause ? Json(*v.escape_clause) : Json(nullptr);
  if (v.witness)
    j["witness"] = v.witness->to_text();
  else if (v.spectrum)
    j["witness"] = Json{{"spectrum", *v.spectrum}};
  else
    j["witness"] = nullptr;
  j["counterexample"] = v.counterexample;
  if (v.note) j["note"] = *v.note;
  return j;
}

}  // namespace

std::string to_json(const ConditionReport& r) {
  Json j;
  j["order"] = r.order;
  j["strong"] = r.strong;
  j["underlying_2connected"] = r.underlying_2connected;
  j["cut_vertices"] = names(r.cut_vertices.members());
  Json pairs = Json::array();
  for (const auto& p : r.dominating_pairs)
    pairs.push_back(Json{{"pair", names({p.u, p.v})}, {"witnesses", names(p.witnesses.members())}});
  j["dominating_pairs"] = pairs;
  j["max_bk"] = r.max_bk.vacuous ? Json("vacuous") : Json(r.max_bk.level);
  j["wang"] = r.wang;
  j["sum_condition"] = r.sum_condition;
  Json degrees = Json::object();
  for (const auto& [v, d] : r.degrees) degrees[v.name()] = Json{{"out", d.out}, {"in", d.in}, {"total", d.total}};
  j["degrees"] = degrees;
  return j.dump(2);
}

std::string to_json(const Spectrum& s) { return Json(s.lengths()).dump(); }

std::string to_json(const TheoremVerdict& v) { return verdict_json(v).dump(2); }

std::string to_json(const HuntReport& r, bool with_timing) {
  Json j;
  j["theorem"] = std::string(to_string(r.theorem));
  j["spec"] = Json{{"half_order", r.spec.half_order},
                   {"mode", std::string(to_string(r.spec.mode))},
                   {"arc_density", r.spec.arc_density},
                   {"seed", r.spec.seed},
                   {"count", r.spec.count}};
  j["tested"] = r.tested;
  j["discarded"] = r.discarded;
  j["hypotheses_met"] = r.hypotheses_met;
  Json rej = Json::object();
  for (const auto& [k, n] : r.rejections) rej[k] = n;
  j["rejections"] = rej;
  Json ces = Json::array();
  for (const auto& c : r.counterexamples)
    ces.push_back(Json{{"index", c.index}, {"digraph", c.digraph}, {"verdict", verdict_json(c.verdict)}});
  j["counterexamples"] = ces;
  j["distinct_canonical_forms"] = r.distinct_canonical_forms;
  if (with_timing) j["duration_ms"] = static_cast<std::int64_t>(r.duration_ms);
  return j.dump(2);
}

}  // namespace bbd
