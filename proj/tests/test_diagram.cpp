#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chroma/diagram.hpp"
#include "fixtures.hpp"

using namespace chroma;
namespace fx = chroma::fixtures;

TEST_CASE("parsing the reference two-crossing link") {
  ColoredDiagram d = parse_diagram(fx::hopf_reference_json());
  CHECK(d.num_crossings() == 2);
  REQUIRE(d.num_components() == 2);
  CHECK(d.components()[0].edges == std::vector<EdgeId>{1, 2});
  CHECK(d.components()[1].edges == std::vector<EdgeId>{3, 4});
  CHECK(d.color(0) == "a");
  CHECK(d.color(1) == "b");
  CHECK(d.base_points() == std::vector<EdgeId>{1, 3});
}

TEST_CASE("parse validation") {
  CHECK_THROWS_AS(parse_diagram("{not json"), DiagramError);
  // edge 1 used three times
  CHECK_THROWS_AS(parse_diagram(R"({"crossings":[
      {"id":"c1","sign":-1,"under_in":1,"under_out":2,"over_in":3,"over_out":4},
      {"id":"c2","sign":-1,"under_in":4,"under_out":3,"over_in":1,"over_out":1}],
      "free_loops":[],"colors":["a","b"]})"),
                  DiagramError);
  // port collision: under strand enters and leaves on the same edge
  CHECK_THROWS_AS(parse_diagram(R"({"crossings":[
      {"id":"c1","sign":1,"under_in":1,"under_out":1,"over_in":2,"over_out":2}],
      "free_loops":[],"colors":["a"]})"),
                  DiagramError);
  // color list length mismatch
  CHECK_THROWS_AS(parse_diagram(R"({"crossings":[],"free_loops":["a","a"],"colors":["a"]})"),
                  DiagramError);
  CHECK_THROWS_AS(parse_diagram(R"({"crossings":[],"free_loops":[],"colors":[]})")
                      .crossing("zz"),
                  DiagramError);
}

TEST_CASE("zero-crossing unlinks") {
  ColoredDiagram d = parse_diagram(R"({"crossings":[],"free_loops":["a","a"],"colors":["a","a"]})");
  CHECK(d.num_components() == 2);
  CHECK(d.distinct_color_count() == 1);
  ColoredDiagram o32 = ColoredDiagram::build({}, {"a", "a", "b"}, {"a", "a", "b"});
  CHECK(o32.num_components() == 3);
  CHECK(o32.distinct_color_count() == 2);
}

TEST_CASE("component extraction by edge-following") {
  CHECK(fx::hopf().num_components() == 2);
  CHECK(fx::trefoil_left().num_components() == 1);
  CHECK(fx::trefoil_left().num_crossings() == 3);
}

TEST_CASE("switch is a sign-flipping involution") {
  ColoredDiagram d = fx::hopf();
  std::string id = d.crossings()[0].id;
  ColoredDiagram s = d.switch_crossing(id);
  CHECK(s.crossing(id).sign == 1);
  CHECK(d.crossing(id).sign == -1);
  CHECK(s.switch_crossing(id) == d);
  CHECK_THROWS_AS(d.switch_crossing("nope"), DiagramError);
}

TEST_CASE("merge_colors") {
  ColoredDiagram d = fx::hopf("a", "b");
  CHECK(d.merge_colors("a", "a") == d);
  ColoredDiagram m = d.merge_colors("b", "a");
  CHECK(m.distinct_color_count() == 1);
  CHECK(m.color(0) == "a");
  CHECK(m.color(1) == "a");

  ColoredDiagram u = ColoredDiagram::build({}, {"a", "b", "c"}, {"a", "b", "c"});
  ColoredDiagram v = u.merge_colors("a", "b");
  CHECK(v.colors() == std::vector<Color>{"a", "a", "c"});
  CHECK_THROWS_AS(u.merge_colors("a", "zebra"), DiagramError);
}

TEST_CASE("smoothing the reference link") {
  ColoredDiagram d = parse_diagram(fx::hopf_reference_json());
  ColoredDiagram s = d.smooth("c1");
  CHECK(s.num_crossings() == 1);
  CHECK(s.num_components() == 1);
  // the survivor is a kink: one strand exits straight into the other role
  const Crossing& c = s.crossings()[0];
  CHECK((c.under_out == c.over_in || c.over_out == c.under_in));
  // two distinct colors merged into one
  CHECK(s.distinct_color_count() == 1);

  // smoothing the kink detaches both circles
  ColoredDiagram s2 = s.smooth(c.id);
  CHECK(s2.num_crossings() == 0);
  CHECK(s2.num_components() == 2);
  CHECK(s2.distinct_color_count() == 1);
}

TEST_CASE("smoothing a self-crossing splits one component into two") {
  ColoredDiagram t = fx::trefoil_left();
  ColoredDiagram s = t.smooth(t.crossings()[0].id);
  CHECK(s.num_components() == 2);
  CHECK(s.num_crossings() == 2);
  CHECK(s.color(0) == s.color(1));
}

TEST_CASE("smooth changes component count by exactly one") {
  ColoredDiagram h = fx::hopf();
  for (const auto& c : h.crossings()) {
    int before = h.num_components();
    int after = h.smooth(c.id).num_components();
    CHECK(std::abs(after - before) == 1);
  }
}

TEST_CASE("reverse and mirror") {
  ColoredDiagram d = fx::trefoil_left();
  CHECK(d.reverse_all().reverse_all() == d);
  ColoredDiagram m = d.mirror();
  for (const auto& c : m.crossings()) CHECK(c.sign == 1);
  CHECK(m.mirror() == d);
}

TEST_CASE("disjoint union keeps color namespaces apart") {
  ColoredDiagram k = fx::hopf("a", "b");
  ColoredDiagram o = ColoredDiagram::build({}, {"a"}, {"a"});
  ColoredDiagram u = disjoint_union(k, o);
  CHECK(u.num_components() == 3);
  CHECK(u.distinct_color_count() == 3);  // the new circle's "a" is renamed
  CHECK(u.num_crossings() == 2);
}

TEST_CASE("connected sum merges the joined color classes") {
  ColoredDiagram a = fx::trefoil_left("p");
  ColoredDiagram b = fx::trefoil_left("q");
  ColoredDiagram s = connected_sum(a, 0, b, 0);
  CHECK(s.num_components() == 1);
  CHECK(s.num_crossings() == 6);
  CHECK(s.distinct_color_count() == 1);

  // joining along a circle leaves the partner untouched up to colors
  ColoredDiagram o = ColoredDiagram::build({}, {"z"}, {"z"});
  ColoredDiagram so = connected_sum(a, 0, o, 0);
  CHECK(so.num_components() == 1);
  CHECK(so.num_crossings() == 3);
}

TEST_CASE("merge order does not change the induced partition") {
  ColoredDiagram d =
      ColoredDiagram::build({}, {"a", "b", "c", "b"}, {"a", "b", "c", "b"});
  ColoredDiagram m1 = d.merge_colors("a", "b").merge_colors("a", "c");
  ColoredDiagram m2 = d.merge_colors("b", "c").merge_colors("a", "b");
  CHECK(canonical_coloration(m1) == canonical_coloration(m2));
  CHECK(m1.crossings() == d.crossings());
}

TEST_CASE("coloration canonicalization and equivalence") {
  ColoredDiagram d = ColoredDiagram::build({}, {"q", "p", "q"}, {"q", "p", "q"});
  CHECK(canonical_coloration(d) == std::vector<int>{0, 1, 0});
  CHECK(colorations_equivalent({"a", "b", "a"}, {"x", "y", "x"}));
  CHECK(!colorations_equivalent({"a", "b", "a"}, {"x", "x", "y"}));
  CHECK_THROWS_AS(colorations_equivalent({"a"}, {"a", "b"}), DiagramError);
}

TEST_CASE("set partition enumeration") {
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(1).size() == 1);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(5).size() == 52);
  CHECK(set_partitions(8).size() == 4140);
}

TEST_CASE("json round trip") {
  ColoredDiagram d = fx::hopf();
  ColoredDiagram back = parse_diagram(to_json(d));
  CHECK(back == d);
}

TEST_CASE("order and base point overrides") {
  ColoredDiagram d = parse_diagram(fx::hopf_reference_json());
  ColoredDiagram e = d.with_order_and_bases({1, 0}, {2, 3});
  CHECK(e.component_order() == std::vector<int>{1, 0});
  CHECK(e.base_points() == std::vector<EdgeId>{2, 3});
  CHECK_THROWS_AS(d.with_order_and_bases({0, 0}, {1, 3}), DiagramError);
  CHECK_THROWS_AS(d.with_order_and_bases({0, 1}, {3, 1}), DiagramError);
}
