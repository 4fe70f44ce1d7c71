#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chroma/fuzz.hpp"
#include "chroma/skein.hpp"
#include "fixtures.hpp"

using namespace chroma;
namespace fx = chroma::fixtures;

namespace {

SkeinValue term_sv(int c, int ex, int ew, int et) {
  return SkeinValue::from_poly(LaurentPoly::term(c, ex, ew, et));
}

}  // namespace

TEST_CASE("deciding plan of the reference link") {
  ColoredDiagram d = parse_diagram(fx::hopf_reference_json());
  DecidingPlan plan = deciding_plan(d);
  REQUIRE(plan.size() == 1);
  CHECK(plan[0].crossing == "c2");
  CHECK(plan[0].sign == -1);
  CHECK(plan[0].same_color == false);

  CHECK(deciding_plan(fx::unknot()).empty());
  // ascending diagram: switching every deciding crossing empties the plan
  CHECK(deciding_plan(d.switch_crossing("c2")).empty());
}

TEST_CASE("unlink closed form") {
  CHECK(unlink_value({1, 1}) == SkeinValue::one());
  // n = c is a pure power of 1/(wx)
  for (int c = 1; c <= 5; ++c)
    CHECK(unlink_value({c, c}) == fx::one_over_wx().pow(c - 1));
  CHECK(unlink_value({2, 1}) == fx::y_over_wx());
  CHECK_THROWS_AS(unlink_value({2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(unlink_value({1, 0}), std::invalid_argument);
}

TEST_CASE("two-crossing link values match the worked example") {
  CHECK(evaluate_F(fx::hopf("a", "b")) == fx::F_hopf_two_colors());
  CHECK(evaluate_F(fx::hopf("a", "a")) == fx::F_hopf_monochrome());
  CHECK(fx::F_hopf_two_colors() != fx::F_hopf_monochrome());
}

TEST_CASE("trefoil value matches the worked example") {
  CHECK(evaluate_F(fx::trefoil_left()) == fx::F_trefoil_left());
}

TEST_CASE("value on unknot diagrams with kinks is 1") {
  ColoredDiagram kink = braid_closure(parse_braid_word("s1"), {"a", "a"}).diagram;
  CHECK(evaluate_F(kink) == SkeinValue::one());
  ColoredDiagram kink2 = braid_closure(parse_braid_word("s1^-1"), {"a", "a"}).diagram;
  CHECK(evaluate_F(kink2) == SkeinValue::one());
}

TEST_CASE("adding a fresh-colored circle divides by wx") {
  std::mt19937_64 rng(21);
  ColoredDiagram circle = ColoredDiagram::build({}, {"z"}, {"z"});
  for (int i = 0; i < 6; ++i) {
    ColoredDiagram d = random_closure(rng, 6, 3, 3).diagram;
    CHECK(evaluate_F(disjoint_union(d, circle)) ==
          evaluate_F(d) * fx::one_over_wx());
  }
}

TEST_CASE("skein relation III holds at arbitrary sites") {
  std::mt19937_64 rng(22);
  SkeinValue inv_w = term_sv(1, 0, -1, 0), pos_w = term_sv(1, 0, 1, 0);
  SkeinValue one_minus_tinv = SkeinValue::one() - term_sv(1, 0, 0, -1);
  for (int i = 0; i < 25; ++i) {
    ColoredDiagram d = random_closure(rng, 7, 3, 3).diagram;
    const auto& cs = d.crossings();
    const Crossing& c = cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)];
    ColoredDiagram kp = c.sign > 0 ? d : d.switch_crossing(c.id);
    ColoredDiagram km = c.sign > 0 ? d.switch_crossing(c.id) : d;
    auto [ca, cb] = kp.strand_colors(c.id);
    ColoredDiagram kps = ca == cb ? kp : kp.merge_colors(ca, cb);
    ColoredDiagram ksim = kp.smooth(c.id);
    // (1/w) F(K+) - w F(K-) = (1 - 1/t) F(K~) + (1/w)(1 - 1/t) F(K+,~)
    SkeinValue lhs = inv_w * evaluate_F(kp) - pos_w * evaluate_F(km);
    SkeinValue rhs = one_minus_tinv * evaluate_F(ksim) +
                     inv_w * one_minus_tinv * evaluate_F(kps);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("relation IV holds at monochrome sites") {
  std::mt19937_64 rng(23);
  SkeinValue inv_tw = term_sv(1, 0, -1, -1), pos_w = term_sv(1, 0, 1, 0);
  SkeinValue one_minus_tinv = SkeinValue::one() - term_sv(1, 0, 0, -1);
  for (int i = 0; i < 25; ++i) {
    ColoredDiagram d = random_closure(rng, 7, 3, 3, /*monochrome=*/true).diagram;
    const auto& cs = d.crossings();
    const Crossing& c = cs[std::uniform_int_distribution<size_t>(0, cs.size() - 1)(rng)];
    ColoredDiagram kp = c.sign > 0 ? d : d.switch_crossing(c.id);
    ColoredDiagram km = c.sign > 0 ? d.switch_crossing(c.id) : d;
    ColoredDiagram ksim = kp.smooth(c.id);
    // (1/tw) F(K+,~) - w F(K-,~) = (1 - 1/t) F(K~)
    SkeinValue lhs = inv_tw * evaluate_F(kp) - pos_w * evaluate_F(km);
    CHECK(lhs == one_minus_tinv * evaluate_F(ksim));
  }
}

TEST_CASE("order and base point independence") {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 12; ++i) {
    ColoredDiagram d = random_closure(rng, 6, 3, 3).diagram;
    SkeinValue base = evaluate_F(d);
    int n = d.num_components();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      CHECK(evaluate_F(d.with_order_and_bases(order, d.base_points())) == base);
    } while (std::next_permutation(order.begin(), order.end()));

    for (int rep = 0; rep < 3; ++rep) {
      std::vector<EdgeId> bases;
      for (int k = 0; k < n; ++k) {
        const auto& comp = d.components()[k];
        if (comp.is_free_loop()) {
          bases.push_back(-1);
        } else {
          bases.push_back(comp.edges[std::uniform_int_distribution<size_t>(
              0, comp.edges.size() - 1)(rng)]);
        }
      }
      CHECK(evaluate_F(d.with_order_and_bases(d.component_order(), bases)) == base);
    }
  }
}

TEST_CASE("coloration sweep over all partitions") {
  ColoredDiagram unlink2 = ColoredDiagram::build({}, {"a", "b"}, {"a", "b"});
  auto table = all_colorations_F(unlink2);
  REQUIRE(table.size() == 2);
  CHECK(table.at({0, 0}) == fx::y_over_wx());
  CHECK(table.at({0, 1}) == fx::one_over_wx());

  auto hopf_table = all_colorations_F(fx::hopf());
  REQUIRE(hopf_table.size() == 2);
  CHECK(hopf_table.at({0, 0}) == fx::F_hopf_monochrome());
  CHECK(hopf_table.at({0, 1}) == fx::F_hopf_two_colors());

  CHECK(all_colorations_F(fx::unknot()).size() == 1);
  CHECK(all_colorations_F(fx::unknot()).at({0}) == SkeinValue::one());

  // parallel sweep agrees with the serial reference
  ColoredDiagram d = fx::figure_eight();
  CHECK(all_colorations_F(d) == all_colorations_F_serial(d));

  ColoredDiagram big = ColoredDiagram::build(
      {}, std::vector<Color>(9, "a"), std::vector<Color>(9, "a"));
  CHECK_THROWS_AS(all_colorations_F(big), DiagramError);
}

TEST_CASE("memo keys") {
  ColoredDiagram d = fx::hopf("a", "b");
  CHECK(memo_key(d) == memo_key(d));
  CHECK(memo_key(fx::hopf("a", "a")) != memo_key(fx::hopf("a", "b")));
  // canonical relabeling: same partition, different names
  CHECK(memo_key(fx::hopf("p", "q")) == memo_key(fx::hopf("u", "v")));
  CHECK(memo_key(fx::hopf("q", "p")) == memo_key(fx::hopf("a", "b")));
}

TEST_CASE("memoization does not change values") {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 8; ++i) {
    ColoredDiagram d = random_closure(rng, 7, 3, 3).diagram;
    Evaluator with_memo(true), without_memo(false);
    CHECK(with_memo.evaluate(d) == without_memo.evaluate(d));
  }
}

TEST_CASE("orientation reversal invariance") {
  std::mt19937_64 rng(26);
  for (int i = 0; i < 10; ++i) {
    ColoredDiagram d = random_closure(rng, 6, 3, 3).diagram;
    CHECK(evaluate_F(d.reverse_all()) == evaluate_F(d));
  }
}

TEST_CASE("mirror substitution on monochrome diagrams") {
  std::mt19937_64 rng(27);
  for (int i = 0; i < 8; ++i) {
    ColoredDiagram d = random_closure(rng, 6, 3, 3, /*monochrome=*/true).diagram;
    CHECK(evaluate_F(d.mirror()) == evaluate_F(d).invert_wt());
  }
  CHECK(evaluate_F(fx::trefoil_right()) == fx::F_trefoil_left().invert_wt());
}

TEST_CASE("connected sum multiplicativity") {
  std::mt19937_64 rng(28);
  for (int i = 0; i < 5; ++i) {
    ColoredDiagram a = random_closure(rng, 5, 2, 2).diagram;
    ColoredDiagram b = random_closure(rng, 5, 2, 2).diagram;
    int ca = std::uniform_int_distribution<int>(0, a.num_components() - 1)(rng);
    int cb = std::uniform_int_distribution<int>(0, b.num_components() - 1)(rng);
    CHECK(evaluate_F(connected_sum(a, ca, b, cb)) ==
          evaluate_F(a) * evaluate_F(b));
  }
}

TEST_CASE("color bijections leave the value unchanged") {
  ColoredDiagram d = fx::hopf("a", "b");
  CHECK(evaluate_F(d.with_coloration({"x", "y"})) == evaluate_F(d));
  CHECK(evaluate_F(d.with_coloration({"b", "a"})) == evaluate_F(d));
}
