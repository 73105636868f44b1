#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"
#include "bbd/verify.hpp"

using namespace bbd;

namespace {

bool failed_with(const TheoremVerdict& v, std::string_view kind) {
  return std::any_of(v.failed_hypotheses.begin(), v.failed_hypotheses.end(),
                     [&](const auto& f) { return hypothesis_kind(f) == kind; });
}

}  // namespace

TEST_CASE("theorem ids") {
  CHECK(parse_theorem_id("t16") == TheoremId::T16);
  CHECK(parse_theorem_id("COR") == TheoremId::COR);
  CHECK(to_string(TheoremId::T13) == "t13");
  CHECK_THROWS_AS(parse_theorem_id("t99"), std::invalid_argument);
  CHECK(all_theorems().size() == 6);
  CHECK(hypothesis_kind("b0_violated_by_pair(x2,x3)") == "b0_violated_by_pair");
  CHECK(hypothesis_kind("not_strong") == "not_strong");
}

TEST_CASE("t16") {
  auto v = verify_t16(build_d10());
  CHECK(v.hypotheses_met);
  CHECK(v.conclusion_holds == true);
  CHECK(v.escape_clause == "isomorphic to D(10)");
  CHECK_FALSE(v.counterexample);
  CHECK_FALSE(v.witness);

  auto k = verify_t16(build_complete(5, 5));
  CHECK_FALSE(k.hypotheses_met);
  CHECK(failed_with(k, "underlying_2connected"));
  CHECK_FALSE(k.conclusion_holds);

  auto d8 = verify_t16(build_d8());
  CHECK_FALSE(d8.hypotheses_met);
  CHECK(failed_with(d8, "order_too_small"));
}

TEST_CASE("t15") {
  auto k = verify_t15(build_complete(4, 4));
  CHECK(k.hypotheses_met);
  CHECK(k.conclusion_holds == true);
  CHECK(k.spectrum == std::vector<int>{2, 4, 6, 8});

  auto d8 = verify_t15(build_d8());
  CHECK_FALSE(d8.hypotheses_met);
  CHECK(failed_with(d8, "no_pre_hamiltonian"));

  for (int a = 4; a <= 7; ++a) {
    auto c = verify_t15(build_directed_cycle(a));
    CHECK_FALSE(c.hypotheses_met);
    CHECK(c.failed_hypotheses == std::vector<std::string>{"no_pre_hamiltonian"});
  }
}

TEST_CASE("t14") {
  CHECK(verify_t14(build_complete(4, 4)).conclusion_holds == true);
  auto c = verify_t14(build_directed_cycle(4));
  CHECK_FALSE(c.hypotheses_met);
  CHECK(failed_with(c, "is_directed_cycle"));

  // D(8) only reaches B_0, so the B_1 hypothesis rules it out.
  CHECK(max_bk(build_d8()).level == 0);
  auto d8 = verify_t14(build_d8());
  CHECK_FALSE(d8.hypotheses_met);
  CHECK(failed_with(d8, "b1_violated_by_pair"));
}

TEST_CASE("t13") {
  CHECK(verify_t13(build_complete(4, 4)).conclusion_holds == true);
  auto c = verify_t13(build_directed_cycle(4));
  CHECK(c.hypotheses_met);
  CHECK(c.conclusion_holds == true);
  REQUIRE(c.witness);
  CHECK(c.witness->length() == 8);

  CHECK(max_bk(build_d10()).level == 0);
  auto d10 = verify_t13(build_d10());
  CHECK_FALSE(d10.hypotheses_met);
  CHECK(failed_with(d10, "b1_violated_by_pair"));
  CHECK(failed_with(verify_t13(build_d8()), "b1_violated_by_pair"));
}

TEST_CASE("t12") {
  for (int a = 1; a <= 6; ++a) {
    CHECK(verify_t12(build_complete(a, a)).conclusion_holds == true);
    auto c = verify_t12(build_directed_cycle(a));
    CHECK(c.hypotheses_met);
    CHECK(c.conclusion_holds == true);
  }
  auto d10 = verify_t12(build_d10());
  CHECK_FALSE(d10.hypotheses_met);
  CHECK(failed_with(d10, "wang_violated_by_pair"));
}

TEST_CASE("corollary") {
  auto d10 = verify_cor(build_d10());
  CHECK_FALSE(d10.hypotheses_met);
  CHECK(failed_with(d10, "sum_condition_violated_by_pair"));
  CHECK(d10.note);
  auto k = verify_cor(build_complete(4, 4));
  CHECK_FALSE(k.hypotheses_met);
  CHECK(failed_with(k, "underlying_2connected"));
}

TEST_CASE("verdict invariants on random digraphs") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const int a = 2 + t % 5;
    auto d = oracle::random_digraph(rng, a, 0.4 + 0.1 * (t % 6));
    for (auto id : all_theorems()) {
      auto v = verify(id, d);
      CHECK(v.theorem == id);
      CHECK(v.hypotheses_met == v.failed_hypotheses.empty());
      CHECK(v.conclusion_holds.has_value() == v.hypotheses_met);
      CHECK(v.counterexample == (v.hypotheses_met && !*v.conclusion_holds));
      CHECK_FALSE(v.counterexample);
      if (v.escape_clause) {
        CHECK_FALSE(v.witness);
        CHECK(are_isomorphic(d, *v.escape_clause == "isomorphic to D(10)" ? build_d10() : build_d8()));
      }
      if (v.witness) CHECK(validate_witness(d, *v.witness));
      auto again = verify(id, parse(serialize(d)));
      CHECK(again.failed_hypotheses == v.failed_hypotheses);
      CHECK(again.conclusion_holds == v.conclusion_holds);
    }
  }
}
