#include "chroma/braid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace chroma {

BraidWord parse_braid_word(const std::string& text) {
  BraidWord word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    // strip separating commas
    while (!tok.empty() && tok.back() == ',') tok.pop_back();
    if (tok.empty()) continue;
    size_t pos = 0;
    if (tok[pos] == 's' || tok[pos] == 'S') ++pos;
    else throw BraidError("bad braid letter '" + tok + "': expected s<i>[^<e>]");
    size_t digits = 0;
    while (pos + digits < tok.size() && isdigit(tok[pos + digits])) ++digits;
    if (digits == 0) throw BraidError("bad braid letter '" + tok + "': missing index");
    int index = std::stoi(tok.substr(pos, digits));
    pos += digits;
    int power = 1;
    if (pos < tok.size()) {
      if (tok[pos] != '^')
        throw BraidError("bad braid letter '" + tok + "': expected '^'");
      try {
        size_t used = 0;
        power = std::stoi(tok.substr(pos + 1), &used);
        if (used != tok.size() - pos - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw BraidError("bad braid letter '" + tok + "': bad exponent");
      }
    }
    if (index < 1) throw BraidError("generator index must be positive in '" + tok + "'");
    int sign = power >= 0 ? 1 : -1;
    for (int i = 0; i < std::abs(power); ++i) word.push_back({index, sign});
  }
  return word;
}

BraidClosure braid_closure(const BraidWord& word,
                           const std::vector<Color>& strand_colors) {
  int k = static_cast<int>(strand_colors.size());
  if (k < 1) throw BraidError("at least one strand required");
  for (const auto& l : word)
    if (l.index < 1 || l.index >= k)
      throw BraidError("generator s" + std::to_string(l.index) + " needs " +
                       std::to_string(l.index + 1) + " strands, have " +
                       std::to_string(k));

  // cur[i] = edge currently running at position i (1-based)
  std::vector<EdgeId> cur(k + 1);
  for (int i = 1; i <= k; ++i) cur[i] = i;
  EdgeId next_id = k + 1;

  std::vector<Crossing> cs;
  std::vector<std::string> letter_ids;
  std::set<std::pair<EdgeId, EdgeId>> pairs;
  std::vector<std::pair<EdgeId, std::string>> triangles;

  auto snapshot_pairs = [&]() {
    for (int g = 1; g < k; ++g) pairs.insert({cur[g], cur[g + 1]});
  };
  snapshot_pairs();

  for (size_t j = 0; j < word.size(); ++j) {
    const auto& l = word[j];
    EdgeId a = cur[l.index], b = cur[l.index + 1];
    EdgeId o1 = next_id++, o2 = next_id++;
    Crossing c;
    c.id = "c" + std::to_string(j + 1);
    c.sign = l.sign;
    if (l.sign > 0) {
      // position i passes over, landing on position i+1
      c.over_in = a;
      c.over_out = o2;
      c.under_in = b;
      c.under_out = o1;
    } else {
      c.over_in = b;
      c.over_out = o1;
      c.under_in = a;
      c.under_out = o2;
    }
    cs.push_back(c);
    letter_ids.push_back(c.id);
    cur[l.index] = o1;
    cur[l.index + 1] = o2;
    snapshot_pairs();
  }

  // triangle windows: letters j, j+1, j+2 shaped (i, i+-1, i). Each of the
  // three bounding arcs is a slide candidate against the opposite crossing;
  // which one actually passes over (or under) both others depends on the
  // signs and is left to the move itself.
  auto out_at_low = [](const Crossing& c) {
    return c.sign > 0 ? c.under_out : c.over_out;
  };
  auto out_at_high = [](const Crossing& c) {
    return c.sign > 0 ? c.over_out : c.under_out;
  };
  for (size_t j = 0; j + 2 < word.size(); ++j) {
    int i0 = word[j].index, i1 = word[j + 1].index, i2 = word[j + 2].index;
    if (i0 != i2 || std::abs(i0 - i1) != 1) continue;
    const Crossing& first = cs[j];
    const Crossing& middle = cs[j + 1];
    bool up = i1 == i0 + 1;  // middle window sits on the higher gap
    EdgeId alpha = up ? out_at_low(first) : out_at_high(first);
    EdgeId beta = up ? out_at_high(first) : out_at_low(first);
    EdgeId gamma = up ? out_at_low(middle) : out_at_high(middle);
    triangles.emplace_back(alpha, middle.id);
    triangles.emplace_back(beta, cs[j + 2].id);
    triangles.emplace_back(gamma, first.id);
  }

  // closure: the final edge at each position is identified with the top
  // edge; untouched positions close into zero-crossing circles
  std::vector<Color> loops;
  std::map<EdgeId, EdgeId> rename;
  std::vector<bool> is_loop_pos(k + 1, false);
  for (int i = 1; i <= k; ++i) {
    if (cur[i] == i) {
      is_loop_pos[i] = true;
      loops.push_back(strand_colors[i - 1]);
    } else {
      rename[cur[i]] = i;
    }
  }
  for (auto& c : cs) {
    auto fix = [&](EdgeId& e) {
      auto it = rename.find(e);
      if (it != rename.end()) e = it->second;
    };
    fix(c.under_in);
    fix(c.under_out);
    fix(c.over_in);
    fix(c.over_out);
  }

  // closure components are the cycles of the strand permutation; each
  // cycle must carry a single color
  std::vector<int> final_pos(k + 1);
  for (int i = 1; i <= k; ++i) final_pos[i] = i;
  {
    std::vector<int> strand_at(k + 1);
    for (int i = 1; i <= k; ++i) strand_at[i] = i;
    for (const auto& l : word) {
      std::swap(strand_at[l.index], strand_at[l.index + 1]);
    }
    for (int p = 1; p <= k; ++p) final_pos[strand_at[p]] = p;
  }

  std::vector<Color> colors;
  std::vector<bool> seen(k + 1, false);
  for (int i = 1; i <= k; ++i) {
    if (seen[i] || is_loop_pos[i]) continue;
    Color col = strand_colors[i - 1];
    for (int p = i; !seen[p]; p = final_pos[p]) {
      seen[p] = true;
      if (strand_colors[p - 1] != col)
        throw BraidError(
            "strands " + std::to_string(i) + " and " + std::to_string(p) +
            " close into one component but carry different colors");
    }
    colors.push_back(col);
  }
  for (const auto& col : loops) colors.push_back(col);

  // metadata edges carry construction-time ids; apply the closure renames
  // and drop anything touching a zero-crossing circle
  std::vector<std::pair<EdgeId, EdgeId>> pair_list;
  for (auto [l, r] : pairs) {
    if (auto it = rename.find(l); it != rename.end()) l = it->second;
    if (auto it = rename.find(r); it != rename.end()) r = it->second;
    if (l <= k && is_loop_pos[l]) continue;
    if (r <= k && is_loop_pos[r]) continue;
    pair_list.emplace_back(l, r);
  }
  std::sort(pair_list.begin(), pair_list.end());
  pair_list.erase(std::unique(pair_list.begin(), pair_list.end()), pair_list.end());

  BraidClosure out{
      ColoredDiagram::build(std::move(cs), std::move(loops), std::move(colors)),
      std::move(letter_ids), std::move(pair_list), std::move(triangles)};
  return out;
}

}  // namespace chroma
