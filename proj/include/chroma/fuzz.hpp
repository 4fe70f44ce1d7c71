#pragma once

#include <random>
#include <string>
#include <vector>

#include "chroma/braid.hpp"
#include "chroma/diagram.hpp"

namespace chroma {

/// A random braid closure within the stated bounds, recolored uniformly at
/// random from at most max_colors colors. Guaranteed at least one crossing.
BraidClosure random_closure(std::mt19937_64& rng, int max_crossings,
                            int max_components, int max_colors,
                            bool monochrome = false);

struct FuzzConfig {
  int max_crossings = 8;
  int cases = 200;
  std::uint64_t seed = 42;
  int max_components = 3;
  int max_colors = 3;
  /// Negative control: checks a writhe-sensitive statistic instead of the
  /// invariant, which a kink move must break.
  bool inject_bug = false;
};

struct FuzzFailure {
  std::string what;
  std::string diagram_json;
  std::string mutated_json;
};

struct FuzzReport {
  int cases_run = 0;
  int checks_passed = 0;
  std::vector<FuzzFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Per case: one random applicable Reidemeister move, every component-order
/// permutation, random base-point shifts, and a random color bijection; the
/// invariant must be unchanged by each.
FuzzReport run_invariance_fuzz(const FuzzConfig& cfg);

std::string format_report(const FuzzReport& r);

}  // namespace chroma
