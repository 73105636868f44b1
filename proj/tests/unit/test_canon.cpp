#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "bbd/analysis.hpp"
#include "bbd/canon.hpp"
#include "bbd/cycles.hpp"
#include "bbd/hunt.hpp"

using namespace bbd;

namespace {

std::vector<int> degree_multiset(const BipartiteDigraph& d) {
  std::vector<int> out;
  for (auto v : oracle::vertices(d)) out.push_back(d.degree(v).out * 100 + d.degree(v).in);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("exemplar constructors") {
  auto d10 = build_d10();
  CHECK(d10 == oracle::d10_from_arc_list());
  CHECK(d10.arc_count() == 12 + 9 + 2 + 2 + 3);
  CHECK(d10.degree(x(0)).total == 2);
  CHECK(satisfies_bk(d10, 0));

  auto d8 = build_d8();
  CHECK(d8.arc_count() == 18);
  CHECK(d8.half_order() == 4);
  CHECK_FALSE(has_cycle_of_length(d8, 6));
  CHECK(is_strong(d8));
  for (int i : {1, 2})
    for (int j : {1, 2, 3}) CHECK(d8.code(i, j) == ArcCode::Both);
  CHECK(d8.code(0, 0) == ArcCode::Both);
  CHECK(d8.code(0, 1) == ArcCode::Both);
  CHECK(d8.code(3, 3) == ArcCode::Both);

  CHECK(build_complete(2, 3).arc_count() == 12);
  CHECK(build_complete(2, 3).half_order() == 3);
  CHECK(build_complete(2, 3).degree(x(2)).total == 0);
  for (int a = 2; a <= 6; ++a) CHECK(is_hamiltonian(build_complete(a, a)));

  for (int a = 1; a <= 8; ++a) {
    auto c = build_directed_cycle(a);
    CHECK(c.arc_count() == 2 * a);
    CHECK(is_strong(c));
    CHECK(dominating_pairs(c).empty());
    CHECK(cycle_spectrum(c).lengths() == std::vector<int>{2 * a});
  }
}

TEST_CASE("isomorphism on exemplars") {
  std::mt19937_64 rng(31);
  auto d10 = build_d10();
  for (int t = 0; t < 20; ++t) {
    auto iso = oracle::random_relabeling(rng, 5);
    auto r = relabel(d10, iso);
    CHECK(is_isomorphism(d10, r, iso));
    auto m = find_isomorphism(d10, r);
    REQUIRE(m);
    CHECK(is_isomorphism(d10, r, *m));
  }
  CHECK_FALSE(are_isomorphic(d10, build_complete(5, 5)));
  CHECK_FALSE(are_isomorphic(d10, build_d8()));

  Isomorphism swap_only{true, {0, 1, 2, 3}, {0, 1, 2, 3}};
  auto d8s = relabel(build_d8(), swap_only);
  CHECK(d8s == build_d8().swapped());
  auto d8r = relabel(d8s, oracle::random_relabeling(rng, 4));
  CHECK(are_isomorphic(build_d8(), d8r));
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(32);
  CHECK(canonical_form(build_d10()) != canonical_form(build_complete(5, 5)));
  for (int t = 0; t < 100; ++t) {
    auto d = t % 2 ? build_d10() : oracle::random_digraph(rng, 2 + t % 6, 0.4);
    auto r = relabel(d, oracle::random_relabeling(rng, d.half_order()));
    CHECK(canonical_form(d) == canonical_form(r));
    CHECK(canonical_form(d).exact);
    CHECK(r.arc_count() == d.arc_count());
    CHECK(degree_multiset(r) == degree_multiset(d));
    CHECK(is_strong(r) == is_strong(d));
    CHECK(is_underlying_2connected(r) == is_underlying_2connected(d));
    CHECK(max_bk(r) == max_bk(d));
    CHECK(cycle_spectrum(r).lengths() == cycle_spectrum(d).lengths());
  }
}

TEST_CASE("canonical form equality matches exhaustive isomorphism") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    const int a = 2 + t % 3;
    // Sparse pairs with equal arc counts are the interesting case.
    auto d1 = oracle::random_digraph(rng, a, 0.3);
    auto d2 = oracle::random_digraph(rng, a, 0.3);
    if (t % 3 == 0) d2 = relabel(d1, oracle::random_relabeling(rng, a));
    const bool iso = oracle::isomorphic(d1, d2);
    CHECK(are_isomorphic(d1, d2) == iso);
    CHECK((canonical_form(d1) == canonical_form(d2)) == iso);
  }
}

TEST_CASE("classes at a = 2") {
  auto all = enumerate_all(2);
  REQUIRE(all.size() == 256);
  std::vector<BipartiteDigraph> reps;
  for (const auto& d : all)
    if (std::none_of(reps.begin(), reps.end(), [&](const auto& r) { return oracle::isomorphic(r, d); }))
      reps.push_back(d);
  std::vector<BipartiteDigraph> reps_matcher;
  for (const auto& d : all)
    if (std::none_of(reps_matcher.begin(), reps_matcher.end(), [&](const auto& r) { return are_isomorphic(r, d); }))
      reps_matcher.push_back(d);
  std::set<CanonicalForm> forms;
  for (const auto& d : all) forms.insert(canonical_form(d));
  CHECK(reps_matcher.size() == reps.size());
  CHECK(forms.size() == reps.size());
  CHECK(enumerate_all(2, {}, true).size() == reps.size());
}

TEST_CASE("isomorphism is an equivalence relation") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 60; ++t) {
    const int a = 3 + t % 3;
    auto d = oracle::random_digraph(rng, a, 0.5);
    auto e = relabel(d, oracle::random_relabeling(rng, a));
    auto f = relabel(e, oracle::random_relabeling(rng, a));
    auto g = oracle::random_digraph(rng, a, 0.5);
    CHECK(are_isomorphic(d, d));
    CHECK(are_isomorphic(d, e));
    CHECK(are_isomorphic(e, d));
    CHECK(are_isomorphic(e, f));
    CHECK(are_isomorphic(d, f));
    CHECK(are_isomorphic(d, g) == are_isomorphic(g, d));
    CHECK(are_isomorphic(d, g) == are_isomorphic(f, g));
  }
  CHECK_FALSE(are_isomorphic(build_complete(3, 3), build_complete(4, 4)));
}

TEST_CASE("large half-orders use the budgeted search") {
  std::mt19937_64 rng(35);
  auto d = oracle::random_digraph(rng, 9, 0.5);
  auto f = canonical_form(d);
  CHECK_FALSE(f.exact);
  CHECK(f.bytes.size() == 1 + 81);
  CHECK(f.bytes.front() == 9);
}
