#include "chroma/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <json.hpp>

namespace chroma {

namespace {

void check(bool cond, const std::string& msg) {
  if (!cond) throw DiagramError(msg);
}

struct Analysis {
  std::vector<Component> components;  // edge components, canonically sorted
  std::map<EdgeId, std::pair<int, bool>> in_ports;   // edge -> (crossing, over?)
  std::map<EdgeId, std::pair<int, bool>> out_ports;
  std::map<EdgeId, int> edge_component;
};

// Validates the crossing code and extracts the edge-cycle structure.
Analysis analyze(const std::vector<Crossing>& crossings) {
  Analysis a;
  std::set<std::string> ids;
  for (const auto& c : crossings) {
    check(!c.id.empty(), "crossing with empty id");
    check(ids.insert(c.id).second, "duplicate crossing id '" + c.id + "'");
    check(c.sign == 1 || c.sign == -1,
          "crossing '" + c.id + "' has sign outside {+1,-1}");
    check(c.under_in != c.under_out && c.over_in != c.over_out,
          "port collision at crossing '" + c.id + "'");
  }
  for (int i = 0; i < static_cast<int>(crossings.size()); ++i) {
    const auto& c = crossings[i];
    auto add = [&](std::map<EdgeId, std::pair<int, bool>>& ports, EdgeId e, bool over) {
      check(ports.emplace(e, std::make_pair(i, over)).second,
            "edge " + std::to_string(e) + " used more than twice");
    };
    add(a.in_ports, c.under_in, false);
    add(a.in_ports, c.over_in, true);
    add(a.out_ports, c.under_out, false);
    add(a.out_ports, c.over_out, true);
  }
  for (const auto& [e, p] : a.in_ports)
    check(a.out_ports.count(e), "edge " + std::to_string(e) + " never leaves a crossing");
  for (const auto& [e, p] : a.out_ports)
    check(a.in_ports.count(e), "edge " + std::to_string(e) + " never enters a crossing");

  auto next = [&](EdgeId e) {
    const auto& [ci, over] = a.in_ports.at(e);
    return over ? crossings[ci].over_out : crossings[ci].under_out;
  };
  std::set<EdgeId> todo;
  for (const auto& [e, p] : a.out_ports) todo.insert(e);
  while (!todo.empty()) {
    EdgeId start = *todo.begin();  // smallest remaining edge
    Component comp;
    EdgeId e = start;
    do {
      comp.edges.push_back(e);
      todo.erase(e);
      e = next(e);
    } while (e != start);
    a.components.push_back(std::move(comp));
  }
  for (int i = 0; i < static_cast<int>(a.components.size()); ++i)
    for (EdgeId e : a.components[i].edges) a.edge_component[e] = i;
  return a;
}

}  // namespace

ColoredDiagram ColoredDiagram::build(std::vector<Crossing> crossings,
                                     std::vector<Color> free_loops,
                                     std::vector<Color> colors,
                                     std::vector<int> component_order,
                                     std::vector<EdgeId> base_points) {
  ColoredDiagram d;
  d.crossings_ = std::move(crossings);
  d.free_loops_ = std::move(free_loops);

  Analysis a = analyze(d.crossings_);
  d.components_ = std::move(a.components);
  d.in_ports_ = std::move(a.in_ports);
  d.out_ports_ = std::move(a.out_ports);
  d.edge_component_ = std::move(a.edge_component);

  int n_edge_comps = static_cast<int>(d.components_.size());
  for (size_t i = 0; i < d.free_loops_.size(); ++i)
    d.components_.push_back(Component{});
  int n = d.num_components();

  check(static_cast<int>(colors.size()) == n,
        "expected " + std::to_string(n) + " colors, got " +
            std::to_string(colors.size()));
  // free-loop colors are mirrored in the per-component list
  for (size_t i = 0; i < d.free_loops_.size(); ++i)
    d.free_loops_[i] = colors[n_edge_comps + i];
  d.colors_ = std::move(colors);

  if (component_order.empty()) {
    component_order.resize(n);
    std::iota(component_order.begin(), component_order.end(), 0);
  }
  check(static_cast<int>(component_order.size()) == n,
        "component order length mismatch");
  std::vector<int> sorted = component_order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    check(sorted[i] == i, "component order is not a permutation");
  d.component_order_ = std::move(component_order);

  if (base_points.empty()) {
    for (const auto& comp : d.components_)
      base_points.push_back(comp.is_free_loop() ? -1 : comp.edges.front());
  }
  check(static_cast<int>(base_points.size()) == n, "base point list length mismatch");
  for (int i = 0; i < n; ++i) {
    if (d.components_[i].is_free_loop()) {
      base_points[i] = -1;
    } else {
      const auto& es = d.components_[i].edges;
      check(std::find(es.begin(), es.end(), base_points[i]) != es.end(),
            "base point " + std::to_string(base_points[i]) +
                " is not an edge of component " + std::to_string(i));
    }
  }
  d.base_points_ = std::move(base_points);
  return d;
}

int ColoredDiagram::distinct_color_count() const {
  std::set<Color> s(colors_.begin(), colors_.end());
  return static_cast<int>(s.size());
}

int ColoredDiagram::component_of_edge(EdgeId e) const {
  auto it = edge_component_.find(e);
  check(it != edge_component_.end(), "unknown edge " + std::to_string(e));
  return it->second;
}

EdgeId ColoredDiagram::next_edge(EdgeId e) const {
  auto [ci, over] = in_port(e);
  const Crossing& c = crossings_[ci];
  return over ? c.over_out : c.under_out;
}

std::pair<int, bool> ColoredDiagram::in_port(EdgeId e) const {
  auto it = in_ports_.find(e);
  check(it != in_ports_.end(), "unknown edge " + std::to_string(e));
  return it->second;
}

std::pair<int, bool> ColoredDiagram::out_port(EdgeId e) const {
  auto it = out_ports_.find(e);
  check(it != out_ports_.end(), "unknown edge " + std::to_string(e));
  return it->second;
}

std::vector<EdgeId> ColoredDiagram::edges() const {
  std::vector<EdgeId> out;
  out.reserve(in_ports_.size());
  for (const auto& [e, p] : in_ports_) out.push_back(e);
  return out;
}

int ColoredDiagram::crossing_index(const std::string& id) const {
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
    if (crossings_[i].id == id) return i;
  return -1;
}

const Crossing& ColoredDiagram::crossing(const std::string& id) const {
  int i = crossing_index(id);
  check(i >= 0, "unknown crossing '" + id + "'");
  return crossings_[i];
}

std::pair<Color, Color> ColoredDiagram::strand_colors(const std::string& id) const {
  const Crossing& c = crossing(id);
  return {colors_[component_of_edge(c.under_in)],
          colors_[component_of_edge(c.over_in)]};
}

ColoredDiagram ColoredDiagram::switch_crossing(const std::string& id) const {
  int i = crossing_index(id);
  check(i >= 0, "unknown crossing '" + id + "'");
  auto cs = crossings_;
  Crossing& c = cs[i];
  std::swap(c.under_in, c.over_in);
  std::swap(c.under_out, c.over_out);
  c.sign = -c.sign;
  return build(std::move(cs), free_loops_, colors_, component_order_, base_points_);
}

ColoredDiagram ColoredDiagram::merge_colors(const Color& a, const Color& b) const {
  check(std::find(colors_.begin(), colors_.end(), a) != colors_.end(),
        "unknown color '" + a + "'");
  check(std::find(colors_.begin(), colors_.end(), b) != colors_.end(),
        "unknown color '" + b + "'");
  Color merged = std::min(a, b);
  auto cols = colors_;
  for (auto& c : cols)
    if (c == a || c == b) c = merged;
  return build(crossings_, free_loops_, std::move(cols), component_order_, base_points_);
}

ColoredDiagram ColoredDiagram::smooth(const std::string& id) const {
  int idx = crossing_index(id);
  check(idx >= 0, "unknown crossing '" + id + "'");
  const Crossing c = crossings_[idx];

  auto [ca, cb] = strand_colors(id);
  Color merged = std::min(ca, cb);
  auto recolor = [&](const Color& col) {
    return (col == ca || col == cb) ? merged : col;
  };

  std::vector<Crossing> cs;
  cs.reserve(crossings_.size() - 1);
  for (int i = 0; i < static_cast<int>(crossings_.size()); ++i)
    if (i != idx) cs.push_back(crossings_[i]);

  std::vector<Color> loops;
  for (const auto& col : free_loops_) loops.push_back(recolor(col));

  // orientation-respecting reconnection: under_in continues into over_out,
  // over_in into under_out
  auto splice = [&](EdgeId in_e, EdgeId out_e) {
    if (in_e == out_e) {
      // both endpoints were at the removed crossing: the edge closes into
      // a zero-crossing circle
      loops.push_back(recolor(colors_[component_of_edge(in_e)]));
      return;
    }
    EdgeId keep = std::min(in_e, out_e), drop = std::max(in_e, out_e);
    for (auto& x : cs) {
      if (x.under_in == drop) x.under_in = keep;
      if (x.under_out == drop) x.under_out = keep;
      if (x.over_in == drop) x.over_in = keep;
      if (x.over_out == drop) x.over_out = keep;
    }
  };
  splice(c.under_in, c.over_out);
  splice(c.over_in, c.under_out);

  // surviving edges keep their ids, so old components tell us the colors
  Analysis a = analyze(cs);
  std::vector<Color> colors;
  for (const auto& comp : a.components)
    colors.push_back(recolor(colors_[component_of_edge(comp.edges.front())]));
  for (const auto& col : loops) colors.push_back(col);
  return build(std::move(cs), std::move(loops), std::move(colors));
}

ColoredDiagram ColoredDiagram::reverse_all() const {
  auto cs = crossings_;
  for (auto& c : cs) {
    std::swap(c.under_in, c.under_out);
    std::swap(c.over_in, c.over_out);
  }
  return build(std::move(cs), free_loops_, colors_, component_order_, base_points_);
}

ColoredDiagram ColoredDiagram::mirror() const {
  auto cs = crossings_;
  for (auto& c : cs) {
    std::swap(c.under_in, c.over_in);
    std::swap(c.under_out, c.over_out);
    c.sign = -c.sign;
  }
  return build(std::move(cs), free_loops_, colors_, component_order_, base_points_);
}

ColoredDiagram ColoredDiagram::with_coloration(std::vector<Color> colors) const {
  return build(crossings_, free_loops_, std::move(colors), component_order_, base_points_);
}

ColoredDiagram ColoredDiagram::with_order_and_bases(std::vector<int> component_order,
                                                    std::vector<EdgeId> base_points) const {
  return build(crossings_, free_loops_, colors_, std::move(component_order),
               std::move(base_points));
}

std::vector<int> canonical_coloration(const ColoredDiagram& d) {
  std::vector<int> out(d.num_components(), -1);
  std::map<Color, int> seen;
  for (int comp : d.component_order()) {
    const Color& c = d.color(comp);
    auto it = seen.emplace(c, static_cast<int>(seen.size())).first;
    out[comp] = it->second;
  }
  return out;
}

bool colorations_equivalent(const Coloration& c1, const Coloration& c2) {
  if (c1.size() != c2.size())
    throw DiagramError("colorations cover different component sets");
  auto canon = [](const Coloration& c) {
    std::vector<int> out;
    std::map<Color, int> seen;
    for (const auto& col : c)
      out.push_back(seen.emplace(col, static_cast<int>(seen.size())).first->second);
    return out;
  };
  return canon(c1) == canon(c2);
}

std::vector<std::vector<int>> set_partitions(int n) {
  if (n == 0) return {std::vector<int>{}};
  std::vector<std::vector<int>> all;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == n) {
      all.push_back(rgs);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);
  return all;
}

ColoredDiagram disjoint_union(const ColoredDiagram& a, const ColoredDiagram& b) {
  EdgeId offset = 1;
  for (const auto& [e, p] : a.out_ports_) offset = std::max(offset, e + 1);
  EdgeId bmin = 0;
  if (!b.out_ports_.empty()) bmin = std::min(bmin, b.out_ports_.begin()->first);
  offset -= bmin;

  std::set<std::string> used_ids;
  for (const auto& c : a.crossings_) used_ids.insert(c.id);
  std::set<Color> taken(a.colors_.begin(), a.colors_.end());

  // every color of b lands in a fresh namespace
  std::map<Color, Color> rename;
  for (const auto& col : b.colors_) {
    if (rename.count(col)) continue;
    Color fresh = col;
    while (taken.count(fresh)) fresh += "'";
    rename[col] = fresh;
    taken.insert(fresh);
  }

  std::vector<Crossing> cs = a.crossings_;
  for (Crossing c : b.crossings_) {
    while (used_ids.count(c.id)) c.id += "'";
    used_ids.insert(c.id);
    c.under_in += offset;
    c.under_out += offset;
    c.over_in += offset;
    c.over_out += offset;
    cs.push_back(std::move(c));
  }

  int a_edge = 0, b_edge = 0;
  for (const auto& comp : a.components_) a_edge += !comp.is_free_loop();
  for (const auto& comp : b.components_) b_edge += !comp.is_free_loop();

  // a's edge ids are untouched and b's are offset above them, so the
  // union's canonical component order is a's edge components, b's edge
  // components, a's loops, b's loops
  std::vector<Color> loops = a.free_loops_;
  for (const auto& col : b.free_loops_) loops.push_back(rename.at(col));
  std::vector<Color> colors;
  for (int i = 0; i < a_edge; ++i) colors.push_back(a.colors_[i]);
  for (int i = 0; i < b_edge; ++i) colors.push_back(rename.at(b.colors_[i]));
  for (const auto& col : loops) colors.push_back(col);

  return ColoredDiagram::build(std::move(cs), std::move(loops), std::move(colors));
}

ColoredDiagram connected_sum(const ColoredDiagram& a, int comp_a,
                             const ColoredDiagram& b, int comp_b) {
  check(comp_a >= 0 && comp_a < a.num_components(),
        "unknown component of first diagram");
  check(comp_b >= 0 && comp_b < b.num_components(),
        "unknown component of second diagram");

  ColoredDiagram u = disjoint_union(a, b);
  int a_edge = 0, b_edge = 0;
  for (const auto& comp : a.components()) a_edge += !comp.is_free_loop();
  for (const auto& comp : b.components()) b_edge += !comp.is_free_loop();
  int a_loops = a.num_components() - a_edge;

  auto union_index = [&](bool from_a, int idx) {
    bool loop = from_a ? a.components()[idx].is_free_loop()
                       : b.components()[idx].is_free_loop();
    if (from_a) return loop ? a_edge + b_edge + (idx - a_edge) : idx;
    return loop ? a_edge + b_edge + a_loops + (idx - b_edge) : a_edge + idx;
  };
  int ua = union_index(true, comp_a);
  int ub = union_index(false, comp_b);
  Color col_a = u.color(ua), col_b = u.color(ub);
  Color merged = std::min(col_a, col_b);
  auto recolor = [&](const Color& col) {
    return (col == col_a || col == col_b) ? merged : col;
  };

  const Component& cu = u.components()[ua];
  const Component& cv = u.components()[ub];
  if (cu.is_free_loop() || cv.is_free_loop()) {
    // summing along an unknotted circle only merges the color classes
    int drop = cu.is_free_loop() ? ua : ub;
    std::vector<Color> loops, colors;
    for (int i = 0; i < u.num_components(); ++i) {
      if (i == drop) continue;
      Color col = recolor(u.color(i));
      colors.push_back(col);
      if (u.components()[i].is_free_loop()) loops.push_back(col);
    }
    // edge components precede loops in both u and the rebuild
    std::vector<Color> ordered(colors.begin(), colors.end());
    return ColoredDiagram::build(u.crossings(), std::move(loops), std::move(ordered));
  }

  // splice the minimal edges of the two components: each keeps its source
  // crossing and flows into the other's destination
  EdgeId p = cu.edges.front(), q = cv.edges.front();
  auto cs = u.crossings();
  auto [pi, p_over] = u.in_port(p);
  auto [qi, q_over] = u.in_port(q);
  (p_over ? cs[pi].over_in : cs[pi].under_in) = q;
  (q_over ? cs[qi].over_in : cs[qi].under_in) = p;

  std::map<EdgeId, Color> edge_color;
  for (int i = 0; i < a_edge + b_edge; ++i)
    edge_color[u.components()[i].edges.front()] = u.color(i);

  Analysis an = analyze(cs);
  std::vector<Color> colors;
  for (const auto& comp : an.components) {
    Color col;
    for (EdgeId e : comp.edges) {
      auto it = edge_color.find(e);
      if (it != edge_color.end()) {
        col = recolor(it->second);
        break;
      }
    }
    check(!col.empty(), "internal error: component lost its color in connected_sum");
    colors.push_back(col);
  }
  std::vector<Color> loops;
  for (int i = a_edge + b_edge; i < u.num_components(); ++i) {
    Color col = recolor(u.color(i));
    loops.push_back(col);
    colors.push_back(col);
  }
  return ColoredDiagram::build(std::move(cs), std::move(loops), std::move(colors));
}

std::vector<Component> edge_components(const std::vector<Crossing>& crossings) {
  return analyze(crossings).components;
}

ColoredDiagram parse_diagram(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed JSON: ") + e.what());
  }
  try {
    std::vector<Crossing> cs;
    for (const auto& jc : j.value("crossings", nlohmann::json::array())) {
      Crossing c;
      c.id = jc.at("id").get<std::string>();
      c.sign = jc.at("sign").get<int>();
      c.under_in = jc.at("under_in").get<int>();
      c.under_out = jc.at("under_out").get<int>();
      c.over_in = jc.at("over_in").get<int>();
      c.over_out = jc.at("over_out").get<int>();
      cs.push_back(std::move(c));
    }
    std::vector<Color> loops;
    for (const auto& jl : j.value("free_loops", nlohmann::json::array()))
      loops.push_back(jl.get<std::string>());
    std::vector<Color> colors;
    for (const auto& jc : j.at("colors")) colors.push_back(jc.get<std::string>());
    std::vector<int> order;
    if (j.contains("order"))
      for (const auto& jo : j.at("order")) order.push_back(jo.get<int>());
    std::vector<EdgeId> bases;
    if (j.contains("base_points"))
      for (const auto& jb : j.at("base_points"))
        bases.push_back(jb.is_null() ? -1 : jb.get<int>());
    return ColoredDiagram::build(std::move(cs), std::move(loops), std::move(colors),
                                 std::move(order), std::move(bases));
  } catch (const nlohmann::json::exception& e) {
    throw DiagramError(std::string("malformed diagram document: ") + e.what());
  }
}

std::string to_json(const ColoredDiagram& d) {
  nlohmann::ordered_json j;
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& c : d.crossings()) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["sign"] = c.sign;
    jc["under_in"] = c.under_in;
    jc["under_out"] = c.under_out;
    jc["over_in"] = c.over_in;
    jc["over_out"] = c.over_out;
    j["crossings"].push_back(jc);
  }
  j["free_loops"] = nlohmann::ordered_json::array();
  for (int i = 0; i < d.num_components(); ++i)
    if (d.components()[i].is_free_loop()) j["free_loops"].push_back(d.color(i));
  j["colors"] = d.colors();
  j["order"] = d.component_order();
  j["base_points"] = nlohmann::ordered_json::array();
  for (int i = 0; i < d.num_components(); ++i) {
    if (d.base_points()[i] < 0)
      j["base_points"].push_back(nullptr);
    else
      j["base_points"].push_back(d.base_points()[i]);
  }
  return j.dump();
}

}  // namespace chroma
