#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chroma/diagram.hpp"

namespace chroma {

struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adds a kink on an edge. Every combination of sign and strand role is a
/// planar curl, so the move is applicable at any edge.
ColoredDiagram r1_plus(const ColoredDiagram& d, EdgeId edge, int sign,
                       bool over_first);

/// Removes the kink at a crossing (requires the kink pattern).
ColoredDiagram r1_minus(const ColoredDiagram& d, const std::string& crossing);

/// Pokes over_edge across under_edge: two new crossings of opposite sign,
/// over_edge passing over at both. sign_first is the sign of the crossing
/// met first along over_edge; under_reversed marks the under strand meeting
/// that crossing second. The caller is responsible for choosing edges that
/// bound a common face; for braid-closure diagrams use the harvested sites.
ColoredDiagram r2_plus(const ColoredDiagram& d, EdgeId over_edge,
                       EdgeId under_edge, int sign_first,
                       bool under_reversed = false);

/// Removes a cancelling bigon: the two crossings must be joined by single
/// edges on both strands, with one strand over at both and opposite signs.
ColoredDiagram r2_minus(const ColoredDiagram& d, const std::string& c1,
                        const std::string& c2);

/// Triangle slide: the strand owning edge `alpha` (which must run between
/// two crossings directly, passing over both or under both) slides across
/// the crossing `middle` joining the two other strands.
ColoredDiagram r3(const ColoredDiagram& d, EdgeId alpha,
                  const std::string& middle);

/// Crossings carrying a removable kink.
std::vector<std::string> kink_sites(const ColoredDiagram& d);
/// Unordered crossing pairs forming a cancelling bigon.
std::vector<std::pair<std::string, std::string>> bigon_sites(const ColoredDiagram& d);
/// (alpha, middle) pairs matching the triangle-slide pattern. The pattern
/// check is local; face-validity is up to the caller, as with r2_plus.
std::vector<std::pair<EdgeId, std::string>> triangle_sites(const ColoredDiagram& d);

enum class RMove { R1Plus, R1Minus, R2Plus, R2Minus, R3 };

/// Site parameters for the dispatching entry point; the fields used depend
/// on the move.
struct RSite {
  EdgeId edge = -1;          // R1+: kinked edge; R2+: over edge; R3: alpha
  EdgeId edge2 = -1;         // R2+: under edge
  int sign = 1;              // R1+: kink sign; R2+: first crossing sign
  bool over_first = true;    // R1+: role of the first passage
  bool under_reversed = false;  // R2+
  std::string crossing;      // R1-: kink crossing; R2-: first; R3: middle
  std::string crossing2;     // R2-: second crossing
};

ColoredDiagram reidemeister(const ColoredDiagram& d, RMove move, const RSite& site);

}  // namespace chroma
