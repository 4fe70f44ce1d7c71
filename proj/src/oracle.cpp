#include "chroma/oracle.hpp"

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chroma {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Precomputed join tables: per crossing, the two edge pairs joined by the
// A-smoothing and by the B-smoothing. For a positive crossing the
// A-smoothing is the orientation-respecting one.
struct StateSum {
  int n_edges = 0;
  int n_crossings = 0;
  int free_loops = 0;
  std::vector<std::array<int, 4>> a_join;  // (p1a,p1b, p2a,p2b) edge indices
  std::vector<std::array<int, 4>> b_join;
};

StateSum prepare(const ColoredDiagram& d) {
  StateSum s;
  std::map<EdgeId, int> idx;
  auto ix = [&](EdgeId e) {
    return idx.emplace(e, static_cast<int>(idx.size())).first->second;
  };
  for (const auto& c : d.crossings()) {
    int ui = ix(c.under_in), uo = ix(c.under_out);
    int oi = ix(c.over_in), oo = ix(c.over_out);
    std::array<int, 4> oriented{ui, oo, oi, uo};
    std::array<int, 4> disoriented{ui, oi, uo, oo};
    if (c.sign > 0) {
      s.a_join.push_back(oriented);
      s.b_join.push_back(disoriented);
    } else {
      s.a_join.push_back(disoriented);
      s.b_join.push_back(oriented);
    }
  }
  s.n_edges = static_cast<int>(idx.size());
  s.n_crossings = d.num_crossings();
  for (const auto& comp : d.components()) s.free_loops += comp.is_free_loop();
  return s;
}

void accumulate(BracketPoly& acc, const BracketPoly& delta_pow, int a_exp) {
  for (const auto& [e, c] : delta_pow) {
    Int& slot = acc[e + a_exp];
    slot += c;
    if (slot == 0) acc.erase(e + a_exp);
  }
}

// (-A^2 - A^-2)^m
std::vector<BracketPoly> delta_powers(int max_m) {
  std::vector<BracketPoly> pows(max_m + 1);
  pows[0][0] = 1;
  for (int m = 1; m <= max_m; ++m)
    for (const auto& [e, c] : pows[m - 1]) {
      pows[m][e + 2] -= c;
      pows[m][e - 2] -= c;
    }
  return pows;
}

BracketPoly sum_states(const StateSum& s, std::uint64_t first, std::uint64_t last,
                       const std::vector<BracketPoly>& dpow) {
  BracketPoly acc;
  for (std::uint64_t state = first; state < last; ++state) {
    UnionFind uf(s.n_edges);
    int a_count = 0;
    for (int i = 0; i < s.n_crossings; ++i) {
      bool use_a = (state >> i) & 1;
      const auto& j = use_a ? s.a_join[i] : s.b_join[i];
      a_count += use_a ? 1 : -1;
      uf.unite(j[0], j[1]);
      uf.unite(j[2], j[3]);
    }
    int loops = s.free_loops;
    for (int e = 0; e < s.n_edges; ++e) loops += uf.find(e) == e;
    accumulate(acc, dpow[loops - 1], a_count);
  }
  return acc;
}

}  // namespace

BracketPoly kauffman_bracket_serial(const ColoredDiagram& d) {
  if (d.num_components() == 0)
    throw std::invalid_argument("bracket of the empty diagram");
  StateSum s = prepare(d);
  auto dpow = delta_powers(s.n_edges + s.free_loops + 1);
  return sum_states(s, 0, std::uint64_t(1) << s.n_crossings, dpow);
}

BracketPoly kauffman_bracket(const ColoredDiagram& d) {
#ifndef _OPENMP
  return kauffman_bracket_serial(d);
#else
  if (d.num_components() == 0)
    throw std::invalid_argument("bracket of the empty diagram");
  StateSum s = prepare(d);
  auto dpow = delta_powers(s.n_edges + s.free_loops + 1);
  std::uint64_t total = std::uint64_t(1) << s.n_crossings;

  BracketPoly acc;
#pragma omp parallel
  {
    int nt = omp_get_num_threads();
    int id = omp_get_thread_num();
    std::uint64_t chunk = (total + nt - 1) / nt;
    std::uint64_t first = std::min<std::uint64_t>(id * chunk, total);
    std::uint64_t last = std::min<std::uint64_t>(first + chunk, total);
    BracketPoly part = sum_states(s, first, last, dpow);
#pragma omp critical
    for (const auto& [e, c] : part) {
      Int& slot = acc[e];
      slot += c;
      if (slot == 0) acc.erase(e);
    }
  }
  return acc;
#endif
}

int writhe(const ColoredDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += c.sign;
  return w;
}

std::map<int, Int> jones(const ColoredDiagram& d) {
  BracketPoly br = kauffman_bracket(d);
  int w = writhe(d);
  // (-A)^(-3w) = (-1)^w A^(-3w)
  bool negate = (w % 2) != 0;
  std::map<int, Int> out;
  for (const auto& [e, c] : br) {
    int a_exp = e - 3 * w;
    if (a_exp % 2 != 0)
      throw std::logic_error("odd A-exponent after writhe normalization");
    out[-a_exp / 2] = negate ? -c : c;
  }
  return out;
}

std::string render_s_poly(const std::map<int, Int>& p) {
  XsPoly xs;
  for (const auto& [e, c] : p) xs.add_term(XsMonomial{0, e}, c);
  return render(xs);
}

}  // namespace chroma
