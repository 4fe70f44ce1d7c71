#pragma once

#include <initializer_list>
#include <tuple>

#include "chroma/braid.hpp"
#include "chroma/diagram.hpp"
#include "chroma/poly.hpp"

namespace chroma::fixtures {

inline LaurentPoly lp(std::initializer_list<std::tuple<int, int, int, int>> ts) {
  LaurentPoly p;
  for (const auto& [c, ex, ew, et] : ts) p.add_term(Monomial{ex, ew, et}, c);
  return p;
}

/// num / (x^dx w^dw t^dt (1-t)^k), written the way the closed forms read.
inline SkeinValue sv(std::initializer_list<std::tuple<int, int, int, int>> num,
                     int dx, int dw, int dt, int k) {
  return SkeinValue(lp(num).shifted(1, -dx, -dw, -dt), k);
}

// the worked-example values
inline SkeinValue F_hopf_two_colors() {
  // (w^2 x + t - x) / (w^3 x t)
  return sv({{1, 1, 2, 0}, {1, 0, 0, 1}, {-1, 1, 0, 0}}, 1, 3, 1, 0);
}
inline SkeinValue F_hopf_monochrome() {
  // (w^2 t^2 - w^2 t + w^2 - 1) / (w^3 t (1-t))
  return sv({{1, 0, 2, 2}, {-1, 0, 2, 1}, {1, 0, 2, 0}, {-1, 0, 0, 0}}, 0, 3, 1, 1);
}
inline SkeinValue F_trefoil_left() {
  // (w^2 t^2 + w^2 - 1) / (w^4 t^2)
  return sv({{1, 0, 2, 2}, {1, 0, 2, 0}, {-1, 0, 0, 0}}, 0, 4, 2, 0);
}
inline SkeinValue F_reference_link() {
  // [w^4(xt^2 - xt^3) + w^2(t^2 + xt - x - xt^2 + xt^3) + x - xt] / (w^3 x t^2)
  return sv({{1, 1, 4, 2},
             {-1, 1, 4, 3},
             {1, 0, 2, 2},
             {1, 1, 2, 1},
             {-1, 1, 2, 0},
             {-1, 1, 2, 2},
             {1, 1, 2, 3},
             {1, 1, 0, 0},
             {-1, 1, 0, 1}},
            1, 3, 2, 0);
}

inline SkeinValue one_over_wx() { return sv({{1, 0, 0, 0}}, 1, 1, 0, 0); }
inline SkeinValue y_over_wx() { return SkeinValue::y() * one_over_wx(); }

inline const char* hopf_reference_json() {
  return R"({"crossings":[
      {"id":"c1","sign":-1,"under_in":1,"under_out":2,"over_in":3,"over_out":4},
      {"id":"c2","sign":-1,"under_in":4,"under_out":3,"over_in":2,"over_out":1}],
      "free_loops":[],"colors":["a","b"]})";
}

inline ColoredDiagram hopf(const Color& c1 = "a", const Color& c2 = "b") {
  return braid_closure(parse_braid_word("s1^-2"), {c1, c2}).diagram;
}

inline ColoredDiagram trefoil_left(const Color& c = "a") {
  return braid_closure(parse_braid_word("s1^-3"), {c, c}).diagram;
}

inline ColoredDiagram trefoil_right(const Color& c = "a") {
  return braid_closure(parse_braid_word("s1^3"), {c, c}).diagram;
}

inline ColoredDiagram figure_eight(const Color& c = "a") {
  return braid_closure(parse_braid_word("s1 s2^-1 s1 s2^-1"), {c, c, c}).diagram;
}

inline ColoredDiagram unknot() {
  return ColoredDiagram::build({}, {"a"}, {"a"});
}

}  // namespace chroma::fixtures
