#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "grunbaum/budget.hpp"
#include "grunbaum/graph.hpp"

namespace grunbaum {

namespace detail {

/// Exact k-colorability by DSATUR branching: most saturated vertex first,
/// ties by higher degree, then lower id; a new color is only ever the
/// smallest unused one.
class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, const std::vector<char>& active, int k, BudgetMeter& meter)
      : g_(g), active_(active), k_(k), meter_(meter), color_(g.num_vertices(), -1),
        counts_(g.num_vertices(), std::vector<int>(k, 0)), mask_(g.num_vertices(), 0), degree_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (!active_[v]) continue;
      ++remaining_;
      for (Vertex w : g.neighbors(v)) degree_[v] += active_[w] ? 1 : 0;
    }
  }

  /// True when a coloring was found, false when none exists. Throws
  /// BudgetExceeded when the meter runs out.
  bool solve() { return descend(0); }
  const std::vector<int>& colors() const { return color_; }

 private:
  Vertex pick() const {
    Vertex best = -1;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < g_.num_vertices(); ++v) {
      if (!active_[v] || color_[v] != -1) continue;
      const int sat = std::popcount(mask_[v]);
      if (sat > best_sat || (sat == best_sat && degree_[v] > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = degree_[v];
      }
    }
    return best;
  }

  void assign(Vertex v, int c, int delta) {
    for (Vertex w : g_.neighbors(v)) {
      if (!active_[w]) continue;
      int& n = counts_[w][c];
      n += delta;
      if (n > 0)
        mask_[w] |= 1u << c;
      else
        mask_[w] &= ~(1u << c);
    }
  }

  bool descend(int used) {
    if (remaining_ == 0) return true;
    const Vertex v = pick();
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if (mask_[v] & (1u << c)) continue;
      if (!meter_.tick()) fail(ErrorCode::BudgetExceeded, "vertex coloring search budget exhausted");
      color_[v] = c;
      --remaining_;
      assign(v, c, +1);
      if (descend(std::max(used, c + 1))) return true;
      assign(v, c, -1);
      ++remaining_;
      color_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  const std::vector<char>& active_;
  int k_;
  BudgetMeter& meter_;
  std::vector<int> color_;
  std::vector<std::vector<int>> counts_;
  std::vector<std::uint32_t> mask_;
  std::vector<int> degree_;
  int remaining_ = 0;
};

}  // namespace detail

/// Proper coloring with colors {0..k-1}, or nullopt if none exists.
/// Vertices of degree < k are peeled off first and colored greedily last.
inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k, BudgetMeter& meter) {
  const int n = g.num_vertices();
  if (k <= 0) return n == 0 ? std::optional<std::vector<int>>(std::vector<int>{}) : std::nullopt;
  std::vector<char> active(n, 1);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<Vertex> peeled;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v)
      if (active[v] && degree[v] < k) {
        active[v] = 0;
        peeled.push_back(v);
        for (Vertex w : g.neighbors(v)) --degree[w];
        changed = true;
      }
  }
  detail::DsaturSearch search(g, active, k, meter);
  if (!search.solve()) return std::nullopt;
  std::vector<int> color = search.colors();
  for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
    std::uint32_t used = 0;
    for (Vertex w : g.neighbors(*it))
      if (color[w] >= 0) used |= 1u << color[w];
    int c = 0;
    while (used & (1u << c)) ++c;
    color[*it] = c;
  }
  return color;
}

inline std::optional<std::vector<int>> k_coloring(const Graph& g, int k, Budget budget = {}) {
  BudgetMeter meter(budget);
  return k_coloring(g, k, meter);
}

/// Proper coloring with colors {0,1,2,3}; nullopt when the graph needs five
/// or more. Always succeeds on planar graphs.
inline std::optional<std::vector<int>> four_color_vertices(const Graph& g, Budget budget = {}) {
  return k_coloring(g, 4, budget);
}

/// Maximum clique by simple branch and bound (vertices in id order).
inline std::vector<Vertex> max_clique(const Graph& g) {
  std::vector<Vertex> best, current;
  std::function<void(std::vector<Vertex>)> expand = [&](std::vector<Vertex> candidates) {
    if (candidates.empty()) {
      if (current.size() > best.size()) best = current;
      return;
    }
    while (!candidates.empty()) {
      if (current.size() + candidates.size() <= best.size()) return;
      const Vertex v = candidates.front();
      candidates.erase(candidates.begin());
      std::vector<Vertex> next;
      for (Vertex w : candidates)
        if (g.adjacent(v, w)) next.push_back(w);
      current.push_back(v);
      expand(std::move(next));
      current.pop_back();
    }
    if (current.size() > best.size()) best = current;
  };
  std::vector<Vertex> all(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) all[v] = v;
  expand(all);
  return best;
}

struct ChromaticResult {
  int chromatic_number = 0;
  std::vector<int> coloring;     // optimal proper coloring
  std::vector<Vertex> clique;    // lower-bound witness
  std::uint64_t nodes = 0;
};

/// Exact chromatic number: clique lower bound, then the smallest k for which
/// k_coloring succeeds. Throws BudgetExceeded.
inline ChromaticResult chromatic_number_with_witness(const Graph& g, Budget budget = {}) {
  BudgetMeter meter(budget);
  ChromaticResult result;
  result.clique = max_clique(g);
  for (int k = std::max<int>(1, static_cast<int>(result.clique.size()));; ++k) {
    if (auto coloring = k_coloring(g, k, meter)) {
      result.chromatic_number = g.num_vertices() == 0 ? 0 : k;
      result.coloring = std::move(*coloring);
      break;
    }
  }
  result.nodes = meter.nodes();
  return result;
}

inline int chromatic_number(const Graph& g, Budget budget = {}) {
  return chromatic_number_with_witness(g, budget).chromatic_number;
}

}  // namespace grunbaum
