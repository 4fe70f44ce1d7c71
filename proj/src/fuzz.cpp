#include "chroma/fuzz.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chroma/moves.hpp"
#include "chroma/oracle.hpp"
#include "chroma/skein.hpp"

namespace chroma {

namespace {

int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

const char* kPalette[] = {"a", "b", "c", "d", "e", "f", "g", "h"};

}  // namespace

BraidClosure random_closure(std::mt19937_64& rng, int max_crossings,
                            int max_components, int max_colors,
                            bool monochrome) {
  for (;;) {
    int strands = pick(rng, 2, std::min(4, std::max(2, max_crossings)));
    int len = pick(rng, 1, max_crossings);
    BraidWord word;
    for (int i = 0; i < len; ++i)
      word.push_back({pick(rng, 1, strands - 1), pick(rng, 0, 1) ? 1 : -1});
    BraidClosure c = braid_closure(word, std::vector<Color>(strands, "a"));
    int n = c.diagram.num_components();
    if (n > max_components) continue;
    std::vector<Color> cols;
    for (int i = 0; i < n; ++i)
      cols.push_back(kPalette[monochrome ? 0 : pick(rng, 0, max_colors - 1)]);
    c.diagram = c.diagram.with_coloration(cols);
    return c;
  }
}

namespace {

// statistic under test: honest mode checks F itself; the injected bug mode
// multiplies by w^writhe, which R1 moves shift
SkeinValue statistic(const ColoredDiagram& d, bool inject_bug) {
  SkeinValue f = evaluate_F(d);
  if (!inject_bug) return f;
  int w = writhe(d);
  return f * SkeinValue::from_poly(LaurentPoly::term(1, 0, w, 0));
}

struct MoveCandidate {
  std::string label;
  ColoredDiagram mutated;
};

MoveCandidate random_move(std::mt19937_64& rng, const BraidClosure& bc,
                          bool force_r1) {
  const ColoredDiagram& d = bc.diagram;
  std::vector<int> kinds;
  kinds.push_back(0);  // R1+ always applies
  auto kinks = kink_sites(d);
  auto bigons = bigon_sites(d);
  std::vector<std::pair<EdgeId, std::string>> triangles;
  for (const auto& [alpha, mid] : bc.triangle_sites) {
    try {
      (void)r3(d, alpha, mid);
      triangles.emplace_back(alpha, mid);
    } catch (const MoveError&) {
      // pattern present but the strand cannot slide; skip
    }
  }
  if (!kinks.empty()) kinds.push_back(1);
  if (!bc.parallel_pairs.empty()) kinds.push_back(2);
  if (!bigons.empty()) kinds.push_back(3);
  if (!triangles.empty()) kinds.push_back(4);

  int kind = force_r1 ? 0 : kinds[pick(rng, 0, static_cast<int>(kinds.size()) - 1)];
  switch (kind) {
    case 0: {
      auto es = d.edges();
      EdgeId e = es[pick(rng, 0, static_cast<int>(es.size()) - 1)];
      int sign = pick(rng, 0, 1) ? 1 : -1;
      bool over_first = pick(rng, 0, 1);
      std::ostringstream label;
      label << "R1+ on edge " << e << " sign " << sign;
      return {label.str(), r1_plus(d, e, sign, over_first)};
    }
    case 1: {
      const auto& c = kinks[pick(rng, 0, static_cast<int>(kinks.size()) - 1)];
      return {"R1- at " + c, r1_minus(d, c)};
    }
    case 2: {
      auto [l, r] = bc.parallel_pairs[pick(
          rng, 0, static_cast<int>(bc.parallel_pairs.size()) - 1)];
      // braid strands run parallel: the left edge poking over the right
      // opens with a positive crossing, and conversely
      bool left_over = pick(rng, 0, 1);
      std::ostringstream label;
      label << "R2+ over " << (left_over ? l : r) << " under " << (left_over ? r : l);
      return {label.str(), left_over ? r2_plus(d, l, r, 1, false)
                                     : r2_plus(d, r, l, -1, false)};
    }
    case 3: {
      auto [u, v] = bigons[pick(rng, 0, static_cast<int>(bigons.size()) - 1)];
      return {"R2- at " + u + "," + v, r2_minus(d, u, v)};
    }
    default: {
      auto [alpha, mid] = triangles[pick(rng, 0, static_cast<int>(triangles.size()) - 1)];
      std::ostringstream label;
      label << "R3 sliding edge " << alpha << " across " << mid;
      return {label.str(), r3(d, alpha, mid)};
    }
  }
}

}  // namespace

FuzzReport run_invariance_fuzz(const FuzzConfig& cfg) {
  std::mt19937_64 rng(cfg.seed);
  FuzzReport report;

  for (int case_i = 0; case_i < cfg.cases; ++case_i) {
    BraidClosure bc = random_closure(rng, std::max(1, cfg.max_crossings),
                                     cfg.max_components, cfg.max_colors);
    const ColoredDiagram& d = bc.diagram;
    SkeinValue base = statistic(d, cfg.inject_bug);
    ++report.cases_run;

    auto expect_equal = [&](const ColoredDiagram& mutated, const std::string& what) {
      if (statistic(mutated, cfg.inject_bug) == base) {
        ++report.checks_passed;
      } else {
        report.failures.push_back({what, to_json(d), to_json(mutated)});
      }
    };

    // one random applicable Reidemeister move
    MoveCandidate mv = random_move(rng, bc, cfg.inject_bug);
    expect_equal(mv.mutated, mv.label);

    // every component-order permutation
    int n = d.num_components();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    do {
      expect_equal(d.with_order_and_bases(order, d.base_points()),
                   "component order permutation");
    } while (std::next_permutation(order.begin(), order.end()));

    // random base points
    std::vector<EdgeId> bases;
    for (int i = 0; i < n; ++i) {
      const auto& comp = d.components()[i];
      if (comp.is_free_loop()) {
        bases.push_back(-1);
      } else {
        bases.push_back(comp.edges[pick(rng, 0, static_cast<int>(comp.edges.size()) - 1)]);
      }
    }
    expect_equal(d.with_order_and_bases(d.component_order(), bases),
                 "base point shift");

    // random color bijection
    std::vector<int> relabel(8);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    std::map<Color, Color> bij;
    int next = 0;
    std::vector<Color> recolored;
    for (const auto& col : d.colors()) {
      if (!bij.count(col)) bij[col] = std::string("z") + kPalette[relabel[next++]];
      recolored.push_back(bij.at(col));
    }
    expect_equal(d.with_coloration(recolored), "color bijection");
  }
  return report;
}

std::string format_report(const FuzzReport& r) {
  std::ostringstream os;
  int total = r.checks_passed + static_cast<int>(r.failures.size());
  os << r.checks_passed << "/" << total << " invariance checks passed over "
     << r.cases_run << " cases\n";
  for (const auto& f : r.failures) {
    os << "counterexample (" << f.what << "):\n  before: " << f.diagram_json
       << "\n  after:  " << f.mutated_json << "\n";
  }
  return os.str();
}

}  // namespace chroma
