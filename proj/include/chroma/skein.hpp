#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chroma/diagram.hpp"
#include "chroma/poly.hpp"

namespace chroma {

/// A crossing whose first encounter along the ordered traversal is an
/// over-pass; switching all of them produces an ascending diagram.
struct PlanEntry {
  std::string crossing;
  int sign = 0;
  bool same_color = false;
  bool operator==(const PlanEntry&) const = default;
};

using DecidingPlan = std::vector<PlanEntry>;

/// Traverses components in their order from their base points and lists
/// the deciding crossings in first-encounter order.
DecidingPlan deciding_plan(const ColoredDiagram& d);

struct UnlinkShape {
  int n = 1;  // circles
  int c = 1;  // colors, 1 <= c <= n
};

/// F on the unlink: y^(n-c) / (wx)^(n-1).
SkeinValue unlink_value(UnlinkShape shape);

/// Deterministic serialization with canonically relabeled edges, crossings
/// and colors; equal keys mean identical evaluation subproblems.
std::string memo_key(const ColoredDiagram& d);

/// The invariant engine. Thread-safe: the memo table uses atomic
/// get-or-compute semantics (duplicated computation of a key is harmless).
class Evaluator {
 public:
  explicit Evaluator(bool use_memo = true) : use_memo_(use_memo) {}

  SkeinValue evaluate(const ColoredDiagram& d);

  size_t memo_size() const { return memo_.size(); }

 private:
  SkeinValue eval_rec(const ColoredDiagram& d, const DecidingPlan& plan);

  bool use_memo_;
  std::unordered_map<std::string, SkeinValue> memo_;
  std::mutex mu_;
};

/// One-shot evaluation with a fresh memo table.
SkeinValue evaluate_F(const ColoredDiagram& d);

/// F per coloration class: one entry for every set partition of the
/// component set, keyed by the partition in restricted-growth form.
/// Throws DiagramError above max_components.
std::map<std::vector<int>, SkeinValue> all_colorations_F(
    const ColoredDiagram& d, int max_components = 8);

/// Serial reference for the sweep above.
std::map<std::vector<int>, SkeinValue> all_colorations_F_serial(
    const ColoredDiagram& d, int max_components = 8);

}  // namespace chroma
