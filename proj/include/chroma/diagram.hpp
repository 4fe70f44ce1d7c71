#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace chroma {

using EdgeId = int;
using Color = std::string;

struct DiagramError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One crossing of an oriented diagram. Edges are named by integer ids;
/// the under strand runs under_in -> under_out, the over strand
/// over_in -> over_out. sign is the usual crossing sign (+1/-1).
struct Crossing {
  std::string id;
  int sign = 0;
  EdgeId under_in = 0;
  EdgeId under_out = 0;
  EdgeId over_in = 0;
  EdgeId over_out = 0;

  bool operator==(const Crossing&) const = default;
};

/// A maximal oriented edge cycle, or a zero-crossing circle (free loop,
/// empty edge list).
struct Component {
  std::vector<EdgeId> edges;  // traversal order, starting at the minimal edge
  bool is_free_loop() const { return edges.empty(); }
  bool operator==(const Component&) const = default;
};

/// Oriented colored link diagram. Components are derived from the crossing
/// code at construction and listed canonically: crossing-bearing components
/// by ascending minimal edge id, then free loops in their given order.
/// Values are immutable; every editing operation returns a new diagram.
class ColoredDiagram {
 public:
  static ColoredDiagram build(std::vector<Crossing> crossings,
                              std::vector<Color> free_loops,
                              std::vector<Color> colors,
                              std::vector<int> component_order = {},
                              std::vector<EdgeId> base_points = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Component>& components() const { return components_; }
  int num_components() const { return static_cast<int>(components_.size()); }
  int num_crossings() const { return static_cast<int>(crossings_.size()); }

  /// Color of a component by canonical index.
  const Color& color(int comp) const { return colors_.at(comp); }
  const std::vector<Color>& colors() const { return colors_; }
  int distinct_color_count() const;

  const std::vector<int>& component_order() const { return component_order_; }
  /// Base edge per component (-1 for free loops).
  const std::vector<EdgeId>& base_points() const { return base_points_; }

  int component_of_edge(EdgeId e) const;
  /// The edge continuing e through the crossing that consumes it.
  EdgeId next_edge(EdgeId e) const;
  /// Index of the crossing consuming e, and whether e enters on the over
  /// strand.
  std::pair<int, bool> in_port(EdgeId e) const;
  /// Index of the crossing emitting e, and whether e leaves on the over
  /// strand.
  std::pair<int, bool> out_port(EdgeId e) const;
  /// All edge ids, ascending.
  std::vector<EdgeId> edges() const;

  int crossing_index(const std::string& id) const;  // -1 when absent
  const Crossing& crossing(const std::string& id) const;

  /// Colors of the two strands at a crossing (under first, over second).
  std::pair<Color, Color> strand_colors(const std::string& id) const;

  ColoredDiagram switch_crossing(const std::string& id) const;
  ColoredDiagram merge_colors(const Color& a, const Color& b) const;
  /// Oriented (Seifert) smoothing of the crossing, recoloring the two
  /// strand color classes with one color.
  ColoredDiagram smooth(const std::string& id) const;
  ColoredDiagram reverse_all() const;
  ColoredDiagram mirror() const;

  ColoredDiagram with_coloration(std::vector<Color> colors) const;
  ColoredDiagram with_order_and_bases(std::vector<int> component_order,
                                      std::vector<EdgeId> base_points) const;

  bool operator==(const ColoredDiagram&) const = default;

 private:
  ColoredDiagram() = default;

  std::vector<Crossing> crossings_;
  std::vector<Color> free_loops_;
  std::vector<Color> colors_;          // by canonical component index
  std::vector<int> component_order_;   // permutation of component indices
  std::vector<EdgeId> base_points_;    // per component, -1 for free loops

  // derived
  std::vector<Component> components_;
  std::map<EdgeId, std::pair<int, bool>> in_ports_;   // edge -> (crossing, over?)
  std::map<EdgeId, std::pair<int, bool>> out_ports_;
  std::map<EdgeId, int> edge_component_;

  friend ColoredDiagram disjoint_union(const ColoredDiagram&, const ColoredDiagram&);
};

ColoredDiagram disjoint_union(const ColoredDiagram& a, const ColoredDiagram& b);

/// Splice component comp_a of a with comp_b of b into one component; the
/// two color classes are merged to their minimum.
ColoredDiagram connected_sum(const ColoredDiagram& a, int comp_a,
                             const ColoredDiagram& b, int comp_b);

/// A coloration over the components of some diagram, indexed canonically.
using Coloration = std::vector<Color>;

/// Canonical relabeling 0,1,2,... by first appearance along the diagram's
/// component order.
std::vector<int> canonical_coloration(const ColoredDiagram& d);

/// Two colorations of the same component set are equivalent iff they induce
/// the same partition.
bool colorations_equivalent(const Coloration& c1, const Coloration& c2);

/// All set partitions of {0..n-1} in restricted-growth-string form.
std::vector<std::vector<int>> set_partitions(int n);

/// Edge cycles of a bare crossing list (validates the code). Used by
/// operations that rebuild a diagram after port surgery.
std::vector<Component> edge_components(const std::vector<Crossing>& crossings);

ColoredDiagram parse_diagram(const std::string& json_text);
std::string to_json(const ColoredDiagram& d);

}  // namespace chroma
