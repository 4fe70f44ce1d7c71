#include "chroma/verify.hpp"

#include "chroma/braid.hpp"
#include "chroma/skein.hpp"

namespace chroma {

namespace {

LaurentPoly lp(std::initializer_list<std::tuple<int, int, int, int>> ts) {
  LaurentPoly p;
  for (const auto& [c, ex, ew, et] : ts) p.add_term(Monomial{ex, ew, et}, c);
  return p;
}

SkeinValue over_monomial(LaurentPoly num, int dx, int dw, int dt, int k) {
  return SkeinValue(num.shifted(1, -dx, -dw, -dt), k);
}

// Closed forms the worked computation must land on.

// two-colored clasp of two circles: (w^2 x + t - x) / (w^3 x t)
SkeinValue hopf_two_colors() {
  return over_monomial(lp({{1, 1, 2, 0}, {1, 0, 0, 1}, {-1, 1, 0, 0}}), 1, 3, 1, 0);
}
// the same link in one color: (w^2 t^2 - w^2 t + w^2 - 1) / (w^3 t (1-t))
SkeinValue hopf_monochrome() {
  return over_monomial(lp({{1, 0, 2, 2}, {-1, 0, 2, 1}, {1, 0, 2, 0}, {-1, 0, 0, 0}}),
                       0, 3, 1, 1);
}
// left-handed trefoil: (w^2 t^2 + w^2 - 1) / (w^4 t^2)
SkeinValue trefoil() {
  return over_monomial(lp({{1, 0, 2, 2}, {1, 0, 2, 0}, {-1, 0, 0, 0}}), 0, 4, 2, 0);
}
// the full link:
// [w^4(xt^2 - xt^3) + w^2(t^2 + xt - x - xt^2 + xt^3) + x - xt] / (w^3 x t^2)
SkeinValue whole_link() {
  return over_monomial(lp({{1, 1, 4, 2},
                           {-1, 1, 4, 3},
                           {1, 0, 2, 2},
                           {1, 1, 2, 1},
                           {-1, 1, 2, 0},
                           {-1, 1, 2, 2},
                           {1, 1, 2, 3},
                           {1, 1, 0, 0},
                           {-1, 1, 0, 1}}),
                       1, 3, 2, 0);
}
SkeinValue one_over_wx() { return over_monomial(lp({{1, 0, 0, 0}}), 1, 1, 0, 0); }

}  // namespace

ColoredDiagram reference_example_diagram() {
  // two components crossing in an alternating five-crossing pattern; the
  // traversal from these base points meets exactly two deciding crossings,
  // one positive and one negative
  ColoredDiagram d =
      braid_closure(parse_braid_word("s1^-1 s2 s1^-1 s2 s1^-1"), {"a", "a", "a"})
          .diagram.with_coloration({"a", "b"});
  return d.with_order_and_bases({0, 1}, {1, 2});
}

std::vector<VerifyCheck> verify_reference_example(bool inject_bug) {
  ColoredDiagram k = reference_example_diagram();
  const std::string first = "c2";   // positive deciding crossing
  const std::string second = "c5";  // negative deciding crossing

  ColoredDiagram k1 = k.switch_crossing(first);
  ColoredDiagram k2 = k1.merge_colors("a", "b");
  ColoredDiagram k3 = k.smooth(first);
  ColoredDiagram k4 = k1.switch_crossing(second);
  ColoredDiagram k5 = k4.merge_colors("a", "b");
  ColoredDiagram k6 = k1.smooth(second);
  ColoredDiagram k7 = k3.switch_crossing(second);
  ColoredDiagram k8 = k3.smooth(second);

  if (inject_bug) k2 = k2.mirror();

  Evaluator ev;
  std::vector<VerifyCheck> checks;
  auto add = [&](const std::string& name, const SkeinValue& expected,
                 const SkeinValue& actual) {
    checks.push_back({name, expected, actual, expected == actual});
  };

  add("F(K1) two-colored clasp", hopf_two_colors(), ev.evaluate(k1));
  SkeinValue f2 = ev.evaluate(k2), f8 = ev.evaluate(k8);
  checks.push_back({"F(K2) = F(K8) monochrome clasp", hopf_monochrome(), f2,
                    f2 == hopf_monochrome() && f8 == f2});
  add("F(K3) trefoil", trefoil(), ev.evaluate(k3));
  add("F(K4) ascending two-color unlink", one_over_wx(), ev.evaluate(k4));
  add("F(K5) ascending one-color unlink", SkeinValue::y() * one_over_wx(),
      ev.evaluate(k5));
  SkeinValue f6 = ev.evaluate(k6), f7 = ev.evaluate(k7);
  checks.push_back({"F(K6) = F(K7) = 1", SkeinValue::one(), f6,
                    f6 == SkeinValue::one() && f7 == SkeinValue::one()});
  add("F(K) whole link", whole_link(), ev.evaluate(k));
  return checks;
}

bool all_passed(const std::vector<VerifyCheck>& checks) {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

}  // namespace chroma
