#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "chroma/diagram.hpp"

namespace chroma {

struct BraidError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// sigma_{index}^{sign}: a crossing of strand positions index and index+1.
struct BraidLetter {
  int index = 1;
  int sign = 1;
  bool operator==(const BraidLetter&) const = default;
};

using BraidWord = std::vector<BraidLetter>;

/// Parses words like "s1^-1 s2 s1^3" (powers expand to repeated letters).
BraidWord parse_braid_word(const std::string& text);

/// A braid trace closure plus construction metadata: the metadata names
/// genuinely planar Reidemeister sites, which random testing relies on.
struct BraidClosure {
  ColoredDiagram diagram;
  std::vector<std::string> letter_crossings;  // crossing id per word letter

  /// Pairs of edges running parallel along a common face (left, right,
  /// both oriented with the braid); valid poke sites.
  std::vector<std::pair<EdgeId, EdgeId>> parallel_pairs;

  /// Triangle slide sites: the arc that may slide and the opposite
  /// (middle) crossing.
  std::vector<std::pair<EdgeId, std::string>> triangle_sites;
};

/// Trace closure of a braid word; strand_colors has one entry per strand
/// and must be constant on each closure cycle.
BraidClosure braid_closure(const BraidWord& word,
                           const std::vector<Color>& strand_colors);

}  // namespace chroma
