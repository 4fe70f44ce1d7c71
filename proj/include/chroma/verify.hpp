#pragma once

#include <string>
#include <vector>

#include "chroma/diagram.hpp"
#include "chroma/poly.hpp"

namespace chroma {

struct VerifyCheck {
  std::string name;
  SkeinValue expected;
  SkeinValue actual;
  bool pass = false;
};

/// Recomputes the built-in worked example: a four-crossing two-color link,
/// the eight diagrams its recursion visits, and their known closed forms.
/// inject_bug flips one fixture to prove the harness can fail.
std::vector<VerifyCheck> verify_reference_example(bool inject_bug = false);

bool all_passed(const std::vector<VerifyCheck>& checks);

/// The reference link itself (components ordered and based as in the
/// worked computation).
ColoredDiagram reference_example_diagram();

}  // namespace chroma
