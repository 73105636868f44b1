#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "bbd/canon.hpp"
#include "bbd/digraph.hpp"

using namespace bbd;

TEST_CASE("empty digraphs") {
  auto d5 = BipartiteDigraph::empty(5);
  CHECK(d5.arc_count() == 0);
  CHECK(d5.half_order() == 5);
  auto d1 = BipartiteDigraph::empty(1);
  CHECK(d1.order() == 2);
  CHECK(d1.arc_count() == 0);
  CHECK_THROWS_AS(BipartiteDigraph::empty(0), DigraphError);
  CHECK_THROWS_AS(BipartiteDigraph::empty(33), DigraphError);
  for (int i = 0; i < 5; ++i) {
    CHECK(d5.degree(x(i)) == Degree{0, 0, 0});
    CHECK(d5.degree(y(i)) == Degree{0, 0, 0});
  }
}

TEST_CASE("add_arc") {
  DigraphBuilder b(3);
  b.add_arc(x(0), y(0)).add_arc(y(0), x(0));
  CHECK(b.peek().code(0, 0) == ArcCode::Both);
  CHECK(arc_multiplicity(ArcCode::Both) == 2);

  DigraphBuilder twice(3);
  twice.add_arc(x(0), y(0)).add_arc(x(0), y(0));
  CHECK(twice.build().arc_count() == 1);
  CHECK(twice.build().code(0, 0) == ArcCode::Forward);

  CHECK_THROWS_AS(b.add_arc(x(0), x(1)), DigraphError);
  CHECK_THROWS_AS(b.add_arc(y(0), y(2)), DigraphError);
  CHECK_THROWS_AS(b.add_arc(x(0), y(3)), DigraphError);
  CHECK_THROWS_AS(b.add_arc(x(-1), y(0)), DigraphError);

  auto built = b.build();
  b.add_arc(x(2), y(2));
  CHECK(built.arc_count() == 2);
}

TEST_CASE("vertex ids and names") {
  CHECK(x(0).id() == 0);
  CHECK(y(0).id() == 1);
  CHECK(x(3).id() == 6);
  CHECK(Vertex::from_id(7) == y(3));
  CHECK(x(1) < y(0));
  CHECK(x(4).name() == "x4");
  CHECK(Vertex::parse("y12") == y(12));
  CHECK_THROWS(Vertex::parse("z1"));
  CHECK_THROWS(Vertex::parse("x"));
  CHECK(parse_vertices("x3 y1 x0") == std::vector<Vertex>{x(3), y(1), x(0)});
  CHECK(format_vertices({x(3), y(1)}) == "x3 y1");
}

TEST_CASE("degrees of D(10)") {
  auto d = oracle::d10_from_arc_list();
  CHECK(d.degree(x(0)).total == 2);
  CHECK(d.degree(x(4)).total == 2);
  CHECK(d.degree_to_set(x(0), {y(0)}).total == 2);
  CHECK(d.degree_to_set(x(0), {}) == Degree{0, 0, 0});
  CHECK(d.degree_to_set(y(1), {x(1), x(2), x(3)}).total == 6);
  CHECK(d.degree_to_set(y(1), {y(0), y(2)}).total == 0);
}

TEST_CASE("arcs_between") {
  auto d = oracle::d10_from_arc_list();
  CHECK(d.arcs_between({x(1), x(2), x(3)}, {y(2), y(3), y(4)}) == std::pair{9, 3});
  CHECK(d.arcs_between({x(0)}, {y(1), y(2), y(3), y(4)}) == std::pair{0, 0});
  auto e = BipartiteDigraph::empty(4);
  CHECK(e.arcs_between({x(0), x(1)}, {y(0), y(3)}) == std::pair{0, 0});
  CHECK_THROWS_AS(d.arcs_between({x(0), y(1)}, {y(1)}), DigraphError);
}

TEST_CASE("text format") {
  CHECK(serialize(BipartiteDigraph::empty(2)) == "bbd 2\n00\n00\n");

  auto d = oracle::d10_from_arc_list();
  auto text = serialize(d);
  CHECK(parse(text) == d);
  CHECK(serialize(parse(text)) == text);

  CHECK(parse("# comment\nbbd 2\n# another\n12\n#\n30\n") == parse("bbd 2\n12\n30\n"));

  auto line_of = [](const char* t) {
    try {
      parse(t);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("bbd 2\n04\n00\n") == 2);
  CHECK(line_of("bbd 2\n00\n000\n") == 3);
  CHECK(line_of("bbd 2\n00\n") > 0);
  CHECK(line_of("bbd 2\n00\n00\n00\n") == 4);
  CHECK(line_of("bdd 2\n00\n00\n") == 1);
  CHECK(line_of("bbd  2\n00\n00\n") == 1);
  CHECK(line_of("bbd 0\n") == 1);
  CHECK(line_of("bbd 2\n00\n00") > 0);
  CHECK(line_of("bbd 2\n0 0\n00\n") == 2);
  CHECK(line_of("bbd 2\r\n00\n00\n") == 1);
}

TEST_CASE("swapped exchanges the parts") {
  DigraphBuilder b(3);
  b.add_arc(x(0), y(2)).add_arc(y(1), x(2));
  auto s = b.build().swapped();
  CHECK(s.has_arc(y(0), x(2)));
  CHECK(s.has_arc(x(1), y(2)));
  CHECK(s.arc_count() == 2);
  CHECK(s.swapped() == b.build());
}

TEST_CASE("random digraph invariants") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int a = 1 + trial % 8;
    auto d = oracle::random_digraph(rng, a, (trial % 5) / 4.0);
    int out = 0, in = 0;
    for (auto v : oracle::vertices(d)) {
      auto deg = d.degree(v);
      out += deg.out;
      in += deg.in;
      CHECK(deg.total == deg.out + deg.in);
      CHECK(deg.total <= 2 * a);
      VertexSet s;
      for (int i = 0; i < a; ++i)
        if (rng() & 1) s.insert(Vertex{static_cast<Part>(rng() & 1), i});
      CHECK(d.degree_to_set(v, s).total <= 2 * s.size());
    }
    CHECK(out == d.arc_count());
    CHECK(in == d.arc_count());

    // A against a partition of Y into singletons.
    VertexSet xs;
    for (int i = 0; i < a; ++i)
      if (rng() & 1) xs.insert(x(i));
    int fwd = 0, back = 0;
    for (int j = 0; j < a; ++j) {
      auto [f, r] = d.arcs_between(xs, {y(j)});
      fwd += f;
      back += r;
    }
    int want_out = 0, want_in = 0;
    for (auto v : xs.members()) {
      want_out += d.degree(v).out;
      want_in += d.degree(v).in;
    }
    CHECK(fwd == want_out);
    CHECK(back == want_in);

    auto text = serialize(d);
    CHECK(parse(text) == d);
    CHECK(serialize(parse(text)) == text);
  }
}
