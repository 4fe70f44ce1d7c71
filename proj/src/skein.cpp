#include "chroma/skein.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace chroma {

namespace {

// Visits each strand passage of each component, in component order from the
// base points. fn(edge, crossing_index, enters_over).
template <typename F>
void traverse(const ColoredDiagram& d, F&& fn) {
  for (int comp : d.component_order()) {
    const Component& c = d.components()[comp];
    if (c.is_free_loop()) continue;
    EdgeId base = d.base_points()[comp];
    EdgeId e = base;
    do {
      auto [ci, over] = d.in_port(e);
      fn(e, ci, over);
      e = d.next_edge(e);
    } while (e != base);
  }
}

SkeinValue coeff(Int c, int ew, int et) {
  return SkeinValue::from_poly(LaurentPoly::term(std::move(c), 0, ew, et));
}

}  // namespace

DecidingPlan deciding_plan(const ColoredDiagram& d) {
  DecidingPlan plan;
  std::set<int> visited;
  traverse(d, [&](EdgeId, int ci, bool over) {
    if (!visited.insert(ci).second) return;
    if (!over) return;
    const Crossing& c = d.crossings()[ci];
    auto [cu, co] = d.strand_colors(c.id);
    plan.push_back(PlanEntry{c.id, c.sign, cu == co});
  });
  return plan;
}

SkeinValue unlink_value(UnlinkShape shape) {
  if (shape.c < 1 || shape.c > shape.n)
    throw std::invalid_argument("unlink shape needs 1 <= c <= n");
  SkeinValue base = SkeinValue::from_poly(
      LaurentPoly::term(1, -(shape.n - 1), -(shape.n - 1), 0));
  return base * SkeinValue::y().pow(static_cast<unsigned>(shape.n - shape.c));
}

std::string memo_key(const ColoredDiagram& d) {
  // canonical edge ids in traversal order, crossings in first-passage order
  std::map<EdgeId, int> edge_id;
  std::vector<int> crossing_order;
  std::set<int> seen_crossings;
  traverse(d, [&](EdgeId e, int ci, bool) {
    edge_id.emplace(e, static_cast<int>(edge_id.size()));
    if (seen_crossings.insert(ci).second) crossing_order.push_back(ci);
  });

  std::ostringstream os;
  auto canon_colors = canonical_coloration(d);
  os << "n" << d.num_components() << ";";
  for (int comp : d.component_order()) {
    const Component& c = d.components()[comp];
    os << "k" << canon_colors[comp] << ":" << c.edges.size() << ";";
  }
  for (int ci : crossing_order) {
    const Crossing& c = d.crossings()[ci];
    os << (c.sign > 0 ? '+' : '-') << edge_id.at(c.under_in) << ','
       << edge_id.at(c.under_out) << ',' << edge_id.at(c.over_in) << ','
       << edge_id.at(c.over_out) << ';';
  }
  return os.str();
}

SkeinValue Evaluator::evaluate(const ColoredDiagram& d) {
  return eval_rec(d, deciding_plan(d));
}

SkeinValue Evaluator::eval_rec(const ColoredDiagram& d, const DecidingPlan& plan) {
  if (plan.empty())
    return unlink_value({d.num_components(), d.distinct_color_count()});

  std::string key;
  if (use_memo_) {
    key = memo_key(d);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  const std::string& x1 = plan.front().crossing;
  int eps = d.crossing(x1).sign;
  auto [col_a, col_b] = d.strand_colors(x1);

  DecidingPlan tail(plan.begin() + 1, plan.end());
  ColoredDiagram switched = d.switch_crossing(x1);
  SkeinValue f_switched = eval_rec(switched, tail);

  ColoredDiagram smoothed = d.smooth(x1);
  SkeinValue f_smoothed = eval_rec(smoothed, deciding_plan(smoothed));

  SkeinValue result;
  if (col_a == col_b) {
    if (eps > 0) {
      // F(K+,~) = t w^2 F(K-,~) + w(t-1) F(K~)
      result = coeff(1, 2, 1) * f_switched +
               (coeff(1, 1, 1) - coeff(1, 1, 0)) * f_smoothed;
    } else {
      // F(K-,~) = t^-1 w^-2 F(K+,~) + w^-1 (t^-1 - 1) F(K~)
      result = coeff(1, -2, -1) * f_switched +
               (coeff(1, -1, -1) - coeff(1, -1, 0)) * f_smoothed;
    }
  } else {
    SkeinValue f_switched_merged =
        eval_rec(switched.merge_colors(col_a, col_b), tail);
    if (eps > 0) {
      // F(K+) = w^2 [F(K-) + (t-1) F(K-,~)] + w(t-1) F(K~)
      result = coeff(1, 2, 0) *
                   (f_switched +
                    (coeff(1, 0, 1) - SkeinValue::one()) * f_switched_merged) +
               (coeff(1, 1, 1) - coeff(1, 1, 0)) * f_smoothed;
    } else {
      // F(K-) = w^-2 [F(K+) + (t^-1 - 1) F(K+,~)] + w^-1 (t^-1 - 1) F(K~)
      result = coeff(1, -2, 0) *
                   (f_switched +
                    (coeff(1, 0, -1) - SkeinValue::one()) * f_switched_merged) +
               (coeff(1, -1, -1) - coeff(1, -1, 0)) * f_smoothed;
    }
  }

  if (use_memo_) {
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, result);
  }
  return result;
}

SkeinValue evaluate_F(const ColoredDiagram& d) {
  Evaluator ev;
  return ev.evaluate(d);
}

namespace {

std::map<std::vector<int>, SkeinValue> colorations_sweep(
    const ColoredDiagram& d, int max_components, bool parallel) {
  int n = d.num_components();
  if (n > max_components)
    throw DiagramError("coloration sweep limited to " +
                       std::to_string(max_components) + " components");
  auto parts = set_partitions(n);
  std::vector<SkeinValue> values(parts.size());
  Evaluator shared;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<Color> cols;
    cols.reserve(n);
    for (int block : parts[i]) cols.push_back(std::to_string(block));
    values[i] = shared.evaluate(d.with_coloration(cols));
  }
  (void)parallel;

  std::map<std::vector<int>, SkeinValue> out;
  for (size_t i = 0; i < parts.size(); ++i) out.emplace(parts[i], values[i]);
  return out;
}

}  // namespace

std::map<std::vector<int>, SkeinValue> all_colorations_F(const ColoredDiagram& d,
                                                         int max_components) {
  return colorations_sweep(d, max_components, true);
}

std::map<std::vector<int>, SkeinValue> all_colorations_F_serial(
    const ColoredDiagram& d, int max_components) {
  return colorations_sweep(d, max_components, false);
}

}  // namespace chroma
