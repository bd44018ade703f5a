#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "grunbaum/error.hpp"

namespace grunbaum {

using Vertex = int;

/// Plain simple undirected graph with sorted adjacency lists and a dense
/// adjacency matrix. Used where the embedding is irrelevant (chromatic
/// number, subgraph search).
class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(static_cast<std::size_t>(n)), matrix_(static_cast<std::size_t>(n) * n, 0) {}

  static Graph from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return num_edges_; }

  void add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
    if (adjacent(u, v)) fail(ErrorCode::ParallelEdge, "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    auto insert_sorted = [](std::vector<Vertex>& list, Vertex x) {
      list.insert(std::lower_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
    matrix_[index(u, v)] = 1;
    matrix_[index(v, u)] = 1;
    ++num_edges_;
  }

  void remove_edge(Vertex u, Vertex v) {
    if (!adjacent(u, v)) return;
    std::erase(adj_[u], v);
    std::erase(adj_[v], u);
    matrix_[index(u, v)] = 0;
    matrix_[index(v, u)] = 0;
    --num_edges_;
  }

  bool adjacent(Vertex u, Vertex v) const { return matrix_[index(u, v)] != 0; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(num_edges_);
    for (Vertex u = 0; u < num_vertices(); ++u)
      for (Vertex v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Join: disjoint union plus every edge between the two parts.
  friend Graph join(const Graph& a, const Graph& b) {
    const int na = a.num_vertices();
    Graph g(na + b.num_vertices());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(na + u, na + v);
    for (Vertex u = 0; u < na; ++u)
      for (Vertex v = 0; v < b.num_vertices(); ++v) g.add_edge(u, na + v);
    return g;
  }

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * adj_.size() + static_cast<std::size_t>(v);
  }
  void check(Vertex v) const {
    if (v < 0 || v >= num_vertices()) fail(ErrorCode::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
  }

  std::vector<std::vector<Vertex>> adj_;
  std::vector<char> matrix_;
  int num_edges_ = 0;
};

inline Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

/// k-th power of the n-cycle: i ~ j iff their cyclic distance is at most k.
inline Graph cycle_power(int n, int k) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (int d = 1; d <= k; ++d) {
      Vertex v = (u + d) % n;
      if (!g.adjacent(u, v)) g.add_edge(u, v);
    }
  return g;
}

inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == g.num_vertices();
}

}  // namespace grunbaum
