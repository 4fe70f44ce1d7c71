#include "chroma/moves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace chroma {

namespace {

EdgeId max_edge(const ColoredDiagram& d) {
  EdgeId m = 0;
  for (EdgeId e : d.edges()) m = std::max(m, e);
  return m;
}

std::string fresh_id(const ColoredDiagram& d, int& counter) {
  std::string id;
  do {
    id = "m" + std::to_string(++counter);
  } while (d.crossing_index(id) >= 0);
  return id;
}

std::map<EdgeId, Color> edge_colors(const ColoredDiagram& d) {
  std::map<EdgeId, Color> m;
  for (int i = 0; i < d.num_components(); ++i)
    for (EdgeId e : d.components()[i].edges) m[e] = d.color(i);
  return m;
}

std::vector<Color> loop_colors(const ColoredDiagram& d) {
  std::vector<Color> out;
  for (int i = 0; i < d.num_components(); ++i)
    if (d.components()[i].is_free_loop()) out.push_back(d.color(i));
  return out;
}

// Reassembles a diagram after port surgery. Surviving edges keep their ids,
// so colors transfer through any representative edge; extra_loops are
// circles that the surgery closed off.
ColoredDiagram rebuild(const ColoredDiagram& old, std::vector<Crossing> cs,
                       std::vector<Color> extra_loops) {
  auto old_colors = edge_colors(old);
  std::vector<Color> loops = loop_colors(old);
  for (auto& c : extra_loops) loops.push_back(std::move(c));

  std::vector<Color> colors;
  for (const auto& comp : edge_components(cs)) {
    Color col;
    for (EdgeId e : comp.edges) {
      auto it = old_colors.find(e);
      if (it != old_colors.end()) {
        col = it->second;
        break;
      }
    }
    if (col.empty())
      throw MoveError("internal error: move produced a component with no inherited color");
    colors.push_back(col);
  }
  for (const auto& col : loops) colors.push_back(col);
  return ColoredDiagram::build(std::move(cs), std::move(loops), std::move(colors));
}

}  // namespace

ColoredDiagram r1_plus(const ColoredDiagram& d, EdgeId edge, int sign,
                       bool over_first) {
  if (sign != 1 && sign != -1) throw MoveError("kink sign must be +1 or -1");
  auto [yi, y_over] = d.in_port(edge);  // validates the edge
  EdgeId g = max_edge(d) + 1, f = max_edge(d) + 2;

  auto cs = d.crossings();
  (y_over ? cs[yi].over_in : cs[yi].under_in) = f;
  Crossing k;
  int counter = 0;
  k.id = fresh_id(d, counter);
  k.sign = sign;
  if (over_first) {
    k.over_in = edge;
    k.over_out = g;
    k.under_in = g;
    k.under_out = f;
  } else {
    k.under_in = edge;
    k.under_out = g;
    k.over_in = g;
    k.over_out = f;
  }
  cs.push_back(k);
  return rebuild(d, std::move(cs), {});
}

ColoredDiagram r1_minus(const ColoredDiagram& d, const std::string& crossing) {
  const Crossing& c = d.crossing(crossing);
  EdgeId outer_in, outer_out;
  if (c.under_out == c.over_in) {
    outer_in = c.under_in;
    outer_out = c.over_out;
  } else if (c.over_out == c.under_in) {
    outer_in = c.over_in;
    outer_out = c.under_out;
  } else {
    throw MoveError("crossing '" + crossing + "' is not a kink");
  }

  std::vector<Crossing> cs;
  for (const auto& x : d.crossings())
    if (x.id != crossing) cs.push_back(x);

  std::vector<Color> extra;
  if (outer_in == outer_out) {
    // the kink was a whole 1-crossing component
    extra.push_back(edge_colors(d).at(outer_in));
  } else {
    for (auto& x : cs) {
      if (x.under_in == outer_out) x.under_in = outer_in;
      if (x.over_in == outer_out) x.over_in = outer_in;
    }
  }
  return rebuild(d, std::move(cs), std::move(extra));
}

ColoredDiagram r2_plus(const ColoredDiagram& d, EdgeId over_edge,
                       EdgeId under_edge, int sign_first, bool under_reversed) {
  if (sign_first != 1 && sign_first != -1)
    throw MoveError("crossing sign must be +1 or -1");
  if (over_edge == under_edge)
    throw MoveError("poke needs two distinct edges");
  auto [yi, y_over] = d.in_port(over_edge);
  auto [zi, z_over] = d.in_port(under_edge);

  EdgeId base = max_edge(d);
  EdgeId e2 = base + 1, e3 = base + 2, f2 = base + 3, f3 = base + 4;

  auto cs = d.crossings();
  (y_over ? cs[yi].over_in : cs[yi].under_in) = e3;
  (z_over ? cs[zi].over_in : cs[zi].under_in) = f3;

  int counter = 0;
  Crossing a, b;
  a.id = fresh_id(d, counter);
  b.id = fresh_id(d, counter);
  a.sign = sign_first;
  b.sign = -sign_first;
  a.over_in = over_edge;
  a.over_out = e2;
  b.over_in = e2;
  b.over_out = e3;
  if (!under_reversed) {
    a.under_in = under_edge;
    a.under_out = f2;
    b.under_in = f2;
    b.under_out = f3;
  } else {
    b.under_in = under_edge;
    b.under_out = f2;
    a.under_in = f2;
    a.under_out = f3;
  }
  cs.push_back(a);
  cs.push_back(b);
  return rebuild(d, std::move(cs), {});
}

ColoredDiagram r2_minus(const ColoredDiagram& d, const std::string& c1,
                        const std::string& c2) {
  if (c1 == c2) throw MoveError("bigon needs two distinct crossings");
  const Crossing* a = &d.crossing(c1);
  const Crossing* b = &d.crossing(c2);
  if (a->sign != -b->sign)
    throw MoveError("bigon crossings must carry opposite signs");

  // orient the pair along the over strand
  if (b->over_out == a->over_in) std::swap(a, b);
  if (a->over_out != b->over_in)
    throw MoveError("crossings are not consecutive on the over strand");
  EdgeId m1 = a->over_out;

  EdgeId m2, r_in, s_out;
  if (a->under_out == b->under_in) {
    m2 = a->under_out;
    r_in = a->under_in;
    s_out = b->under_out;
  } else if (b->under_out == a->under_in) {
    m2 = b->under_out;
    r_in = b->under_in;
    s_out = a->under_out;
  } else {
    throw MoveError("crossings are not consecutive on the under strand");
  }

  EdgeId p = a->over_in, q = b->over_out;
  for (EdgeId outer : {p, q, r_in, s_out})
    if (outer == m1 || outer == m2)
      throw MoveError("degenerate bigon: outer edge re-enters the site");

  std::vector<Crossing> cs;
  for (const auto& x : d.crossings())
    if (x.id != a->id && x.id != b->id) cs.push_back(x);

  auto old_colors = edge_colors(d);
  std::vector<Color> extra;
  std::vector<std::pair<EdgeId, EdgeId>> splices{{p, q}, {r_in, s_out}};
  for (size_t i = 0; i < splices.size(); ++i) {
    auto [in_e, out_e] = splices[i];
    if (in_e == out_e) {
      extra.push_back(old_colors.at(in_e));
      continue;
    }
    for (auto& x : cs) {
      if (x.under_in == out_e) x.under_in = in_e;
      if (x.over_in == out_e) x.over_in = in_e;
      if (x.under_out == out_e) x.under_out = in_e;
      if (x.over_out == out_e) x.over_out = in_e;
    }
    for (size_t j = i + 1; j < splices.size(); ++j) {
      if (splices[j].first == out_e) splices[j].first = in_e;
      if (splices[j].second == out_e) splices[j].second = in_e;
    }
  }
  return rebuild(d, std::move(cs), std::move(extra));
}

namespace {

struct R3Resolution {
  int x, y, z;              // crossing indices: alpha runs x -> z, y opposite
  bool slider_over;         // slider role at both x and z
  bool beta_over_at_y;      // role of the (x,y) strand at y
  bool gamma_over_at_y;
  bool other_over_at_x;     // role of the (x,y) strand at x
  bool other_over_at_z;
};

std::optional<R3Resolution> resolve_r3(const ColoredDiagram& d, EdgeId alpha,
                                       const std::string& middle,
                                       std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return std::nullopt;
  };
  if (std::find(d.edges().begin(), d.edges().end(), alpha) == d.edges().end())
    return fail("unknown edge");
  int yi = d.crossing_index(middle);
  if (yi < 0) return fail("unknown middle crossing");

  auto [xi, x_over] = d.out_port(alpha);
  auto [zi, z_over] = d.in_port(alpha);
  if (xi == zi) return fail("sliding arc is a kink loop");
  if (yi == xi || yi == zi) return fail("middle crossing lies on the sliding arc");
  if (x_over != z_over) return fail("strand is neither over nor under at both of its crossings");
  bool slider_over = x_over;

  const Crossing& X = d.crossings()[xi];
  const Crossing& Z = d.crossings()[zi];
  const Crossing& Y = d.crossings()[yi];

  // arc of the second strand between X and Y, in either direction
  auto connect = [&](const Crossing& from, bool other_over) -> std::optional<EdgeId> {
    EdgeId out_e = other_over ? from.over_out : from.under_out;
    EdgeId in_e = other_over ? from.over_in : from.under_in;
    if (d.in_port(out_e).first == yi) return out_e;
    if (d.out_port(in_e).first == yi) return in_e;
    return std::nullopt;
  };
  auto beta = connect(X, !slider_over);
  if (!beta) return fail("no direct arc between the first crossing and the middle");
  auto gamma = connect(Z, !slider_over);
  if (!gamma) return fail("no direct arc between the last crossing and the middle");
  if (*beta == *gamma) return fail("degenerate triangle: shared arc");

  auto role_at_y = [&](EdgeId e) -> std::optional<bool> {
    if (e == Y.over_in || e == Y.over_out) return true;
    if (e == Y.under_in || e == Y.under_out) return false;
    return std::nullopt;
  };
  auto rb = role_at_y(*beta);
  auto rg = role_at_y(*gamma);
  if (!rb || !rg) return fail("arc misses the middle crossing");
  if (*rb == *rg) return fail("both arcs ride the same strand of the middle crossing");

  return R3Resolution{xi, yi, zi, slider_over, *rb, *rg, !slider_over, !slider_over};
}

}  // namespace

ColoredDiagram r3(const ColoredDiagram& d, EdgeId alpha, const std::string& middle) {
  std::string why;
  auto res = resolve_r3(d, alpha, middle, &why);
  if (!res) throw MoveError("triangle slide not applicable: " + why);

  auto cs = d.crossings();
  auto pair_of = [&](int ci, bool over) -> std::pair<EdgeId&, EdgeId&> {
    Crossing& c = cs[ci];
    if (over) return {c.over_in, c.over_out};
    return {c.under_in, c.under_out};
  };
  auto swap_pairs = [&](int c1, bool over1, int c2, bool over2) {
    auto [i1, o1] = pair_of(c1, over1);
    auto [i2, o2] = pair_of(c2, over2);
    std::swap(i1, i2);
    std::swap(o1, o2);
  };
  // the two other strands swap their passage order with the middle
  // crossing, and the sliding strand meets its two crossings in the
  // opposite order
  swap_pairs(res->x, res->other_over_at_x, res->y, res->beta_over_at_y);
  swap_pairs(res->z, res->other_over_at_z, res->y, res->gamma_over_at_y);
  swap_pairs(res->x, res->slider_over, res->z, res->slider_over);

  // edge set and components are untouched, only the wiring changed
  return ColoredDiagram::build(std::move(cs), loop_colors(d), d.colors(),
                               d.component_order(), d.base_points());
}

std::vector<std::string> kink_sites(const ColoredDiagram& d) {
  std::vector<std::string> out;
  for (const auto& c : d.crossings())
    if (c.under_out == c.over_in || c.over_out == c.under_in)
      out.push_back(c.id);
  return out;
}

std::vector<std::pair<std::string, std::string>> bigon_sites(const ColoredDiagram& d) {
  std::set<std::pair<std::string, std::string>> found;
  for (const auto& a : d.crossings()) {
    for (const auto& b : d.crossings()) {
      if (a.id == b.id || a.sign != -b.sign) continue;
      if (a.over_out != b.over_in) continue;
      EdgeId m1 = a.over_out, m2;
      EdgeId r_in, s_out;
      if (a.under_out == b.under_in) {
        m2 = a.under_out;
        r_in = a.under_in;
        s_out = b.under_out;
      } else if (b.under_out == a.under_in) {
        m2 = b.under_out;
        r_in = b.under_in;
        s_out = a.under_out;
      } else {
        continue;
      }
      bool degenerate = false;
      for (EdgeId outer : {a.over_in, b.over_out, r_in, s_out})
        degenerate |= (outer == m1 || outer == m2);
      if (degenerate) continue;
      found.insert({std::min(a.id, b.id), std::max(a.id, b.id)});
    }
  }
  return {found.begin(), found.end()};
}

std::vector<std::pair<EdgeId, std::string>> triangle_sites(const ColoredDiagram& d) {
  std::vector<std::pair<EdgeId, std::string>> out;
  for (EdgeId alpha : d.edges())
    for (const auto& y : d.crossings())
      if (resolve_r3(d, alpha, y.id, nullptr)) out.emplace_back(alpha, y.id);
  return out;
}

ColoredDiagram reidemeister(const ColoredDiagram& d, RMove move, const RSite& site) {
  switch (move) {
    case RMove::R1Plus:
      return r1_plus(d, site.edge, site.sign, site.over_first);
    case RMove::R1Minus:
      return r1_minus(d, site.crossing);
    case RMove::R2Plus:
      return r2_plus(d, site.edge, site.edge2, site.sign, site.under_reversed);
    case RMove::R2Minus:
      return r2_minus(d, site.crossing, site.crossing2);
    case RMove::R3:
      return r3(d, site.edge, site.crossing);
  }
  throw MoveError("unknown move");
}

}  // namespace chroma
