#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "chroma/fuzz.hpp"
#include "chroma/moves.hpp"
#include "chroma/oracle.hpp"
#include "chroma/skein.hpp"
#include "fixtures.hpp"

using namespace chroma;
namespace fx = chroma::fixtures;

namespace {

BracketPoly bp(std::initializer_list<std::pair<int, int>> ts) {
  BracketPoly p;
  for (auto [e, c] : ts) p[e] = c;
  return p;
}

std::map<int, Int> sp(std::initializer_list<std::pair<int, int>> ts) {
  std::map<int, Int> p;
  for (auto [e, c] : ts) p[e] = c;
  return p;
}

// the cross-check behind the Jones specialization: both paths must agree
void check_specialization(const ColoredDiagram& d) {
  XsPoly from_f = evaluate_F(d).substitute_half();
  REQUIRE(from_f.is_pure_s());
  CHECK(from_f.s_terms() == jones(d));
}

}  // namespace

TEST_CASE("bracket base cases") {
  CHECK(kauffman_bracket(fx::unknot()) == bp({{0, 1}}));
  // positive kink: two-state sum gives -A^3
  ColoredDiagram kink = braid_closure(parse_braid_word("s1"), {"a", "a"}).diagram;
  CHECK(kauffman_bracket(kink) == bp({{3, -1}}));
  ColoredDiagram nkink = braid_closure(parse_braid_word("s1^-1"), {"a", "a"}).diagram;
  CHECK(kauffman_bracket(nkink) == bp({{-3, -1}}));
  // negative Hopf: four-state sum
  CHECK(kauffman_bracket(fx::hopf()) == bp({{4, -1}, {-4, -1}}));
}

TEST_CASE("writhe") {
  CHECK(writhe(fx::hopf()) == -2);
  CHECK(writhe(fx::trefoil_left()) == -3);
  CHECK(writhe(fx::unknot()) == 0);
  CHECK(writhe(fx::figure_eight()) == 0);
}

TEST_CASE("jones values") {
  CHECK(jones(fx::unknot()) == sp({{0, 1}}));
  CHECK(jones(fx::hopf()) == sp({{-1, -1}, {-5, -1}}));
  CHECK(jones(fx::trefoil_left()) == sp({{-2, 1}, {-6, 1}, {-8, -1}}));
  CHECK(jones(fx::trefoil_right()) == sp({{2, 1}, {6, 1}, {8, -1}}));
  // figure eight: s^-4 - s^-2 + 1 - s^2 + s^4
  CHECK(jones(fx::figure_eight()) ==
        sp({{-4, 1}, {-2, -1}, {0, 1}, {2, -1}, {4, 1}}));
  CHECK(render_s_poly(jones(fx::hopf())) == "-s^-1 - s^-5");
}

TEST_CASE("parallel kernel matches the serial reference") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 10; ++i) {
    ColoredDiagram d = random_closure(rng, 9, 4, 2).diagram;
    CHECK(kauffman_bracket(d) == kauffman_bracket_serial(d));
  }
  CHECK(kauffman_bracket(fx::unknot()) == kauffman_bracket_serial(fx::unknot()));
}

TEST_CASE("jones is invariant under Reidemeister moves") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 15; ++i) {
    BraidClosure bc = random_closure(rng, 7, 3, 2);
    const ColoredDiagram& d = bc.diagram;
    auto v = jones(d);
    CHECK(jones(r1_plus(d, d.edges()[0], -1, false)) == v);
    if (!bc.parallel_pairs.empty()) {
      auto [l, r] = bc.parallel_pairs[0];
      CHECK(jones(r2_plus(d, l, r, 1, false)) == v);
    }
    for (const auto& [alpha, mid] : bc.triangle_sites) {
      try {
        ColoredDiagram slid = r3(d, alpha, mid);
        CHECK(jones(slid) == v);
        break;
      } catch (const MoveError&) {
      }
    }
  }
}

TEST_CASE("the invariant specializes to Jones on one-color diagrams") {
  check_specialization(fx::unknot());
  check_specialization(fx::hopf("a", "a"));
  check_specialization(fx::trefoil_left());
  check_specialization(fx::trefoil_right());
  check_specialization(fx::figure_eight());

  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i)
    check_specialization(random_closure(rng, 8, 3, 1, /*monochrome=*/true).diagram);
}

TEST_CASE("multi-component one-color unlinks specialize too") {
  // y/(wx) at w=s, t=s^2 is -s - s^-1, the Jones value of the two-unlink
  ColoredDiagram o2 = ColoredDiagram::build({}, {"a", "a"}, {"a", "a"});
  check_specialization(o2);
}
