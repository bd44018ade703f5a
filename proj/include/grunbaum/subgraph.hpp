#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "grunbaum/budget.hpp"
#include "grunbaum/graph.hpp"

namespace grunbaum {

// ------------------------------------------------------------ named graphs

/// H7: the first Hajós step on two copies of K4. Vertex i is label i+1 of the
/// usual drawing: K4 {1,2,3,4} without 14, K4 {4,5,6,7} without 47, plus 17.
inline Graph h7_graph() {
  const std::vector<std::pair<Vertex, Vertex>> labeled{{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}, {4, 5},
                                                       {4, 6}, {5, 6}, {5, 7}, {6, 7}, {1, 7}};
  Graph g(7);
  for (auto [u, v] : labeled) g.add_edge(u - 1, v - 1);
  return g;
}

/// H7 + K2; vertices 7 and 8 are the K2 ("a" and "b").
inline Graph h7k2_graph() { return join(h7_graph(), complete_graph(2)); }

/// C3 + C5; vertices 0..2 are the triangle ("a","b","c"), 3..7 the pentagon ("1".."5").
inline Graph c3c5_graph() { return join(cycle_graph(3), cycle_graph(5)); }

/// The cube of the 11-cycle: i ~ i±1, i±2, i±3 (mod 11).
inline Graph c11_cubed_graph() { return cycle_power(11, 3); }

// -------------------------------------------------------- subgraph search

enum class Pattern { K7, K6, C11Cubed, H7K2, C3C5 };

inline constexpr std::array<Pattern, 5> kPatternOrder{Pattern::K7, Pattern::K6, Pattern::C11Cubed, Pattern::H7K2,
                                                      Pattern::C3C5};

inline constexpr std::string_view to_string(Pattern p) {
  switch (p) {
    case Pattern::K7: return "K7";
    case Pattern::K6: return "K6";
    case Pattern::C11Cubed: return "C11CUBED";
    case Pattern::H7K2: return "H7K2";
    case Pattern::C3C5: return "C3C5";
  }
  return "?";
}

inline Graph pattern_graph(Pattern p) {
  switch (p) {
    case Pattern::K7: return complete_graph(7);
    case Pattern::K6: return complete_graph(6);
    case Pattern::C11Cubed: return c11_cubed_graph();
    case Pattern::H7K2: return h7k2_graph();
    case Pattern::C3C5: return c3c5_graph();
  }
  return {};
}

/// Injective adjacency-preserving map pattern -> host (not necessarily induced).
struct SubgraphMatch {
  Pattern pattern;
  std::vector<Vertex> map;  // pattern vertex -> host vertex
};

namespace detail {

/// Pattern vertices ordered so that each (after the first) has the most
/// neighbors among those already placed; ties by higher degree, lower id.
inline std::vector<Vertex> matching_order(const Graph& p) {
  const int n = p.num_vertices();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<int> links(n, 0);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == -1 || links[v] > links[best] || (links[v] == links[best] && p.degree(v) > p.degree(best))) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : p.neighbors(best)) ++links[w];
  }
  return order;
}

}  // namespace detail

/// First subgraph embedding of `pattern` into `host` in lexicographic order of
/// host images along the matching order. Candidates are pruned by degree and
/// by adjacency to every already-placed pattern neighbor.
inline std::optional<SubgraphMatch> find_subgraph(const Graph& host, const Graph& pattern, Pattern id,
                                                  BudgetMeter& meter) {
  const int np = pattern.num_vertices();
  const int nh = host.num_vertices();
  if (np > nh) return std::nullopt;
  const auto order = detail::matching_order(pattern);
  std::vector<int> position(np);
  for (int i = 0; i < np; ++i) position[order[i]] = i;
  // Earlier-placed neighbors of each ordered pattern vertex.
  std::vector<std::vector<Vertex>> back(np);
  for (int i = 0; i < np; ++i)
    for (Vertex w : pattern.neighbors(order[i]))
      if (position[w] < i) back[i].push_back(w);

  std::vector<Vertex> map(np, -1);
  std::vector<char> used(nh, 0);
  std::function<bool(int)> extend = [&](int i) -> bool {
    if (i == np) return true;
    const Vertex pv = order[i];
    auto try_candidate = [&](Vertex hv) -> bool {
      if (used[hv] || host.degree(hv) < pattern.degree(pv)) return false;
      for (Vertex w : back[i])
        if (!host.adjacent(map[w], hv)) return false;
      if (!meter.tick()) fail(ErrorCode::BudgetExceeded, "subgraph search budget exhausted");
      map[pv] = hv;
      used[hv] = 1;
      if (extend(i + 1)) return true;
      used[hv] = 0;
      map[pv] = -1;
      return false;
    };
    if (!back[i].empty()) {
      // Candidates come from the neighborhood of one placed neighbor.
      for (Vertex hv : host.neighbors(map[back[i].front()]))
        if (try_candidate(hv)) return true;
    } else {
      for (Vertex hv = 0; hv < nh; ++hv)
        if (try_candidate(hv)) return true;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return SubgraphMatch{id, map};
}

inline std::optional<SubgraphMatch> find_subgraph(const Graph& host, Pattern p, Budget budget = {}) {
  BudgetMeter meter(budget);
  return find_subgraph(host, pattern_graph(p), p, meter);
}

/// Critical 6-chromatic subgraph of a 6-chromatic toroidal graph. All four
/// candidates are searched; anything other than exactly one hit throws
/// ClassificationAnomaly.
inline SubgraphMatch classify_six_chromatic(const Graph& g, Budget budget = {}) {
  BudgetMeter meter(budget);
  if (find_subgraph(g, complete_graph(7), Pattern::K7, meter))
    fail(ErrorCode::PreconditionViolation, "graph contains K7 and is not 6-chromatic");
  std::vector<SubgraphMatch> hits;
  for (Pattern p : {Pattern::K6, Pattern::C11Cubed, Pattern::H7K2, Pattern::C3C5})
    if (auto m = find_subgraph(g, pattern_graph(p), p, meter)) hits.push_back(std::move(*m));
  if (hits.size() != 1) {
    std::string names;
    for (const auto& h : hits) names += std::string(names.empty() ? "" : ",") + std::string(to_string(h.pattern));
    fail(ErrorCode::ClassificationAnomaly,
         "expected exactly one critical 6-chromatic subgraph, found " + std::to_string(hits.size()) +
             (names.empty() ? "" : " (" + names + ")"));
  }
  return std::move(hits.front());
}

}  // namespace grunbaum
