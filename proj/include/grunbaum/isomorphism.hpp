#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "grunbaum/embedding.hpp"

namespace grunbaum {

/// Isomorphism of rotation systems. `reflected` maps rotation-successors to
/// rotation-predecessors (an isomorphism onto the mirror image).
struct MapIsomorphism {
  std::vector<Vertex> vertex_map;
  std::vector<DartId> dart_map;
  bool reflected = false;

  EdgeId edge(EdgeId e) const { return Embedding::edge_of(dart_map[2 * e]); }
};

namespace detail {

inline std::optional<MapIsomorphism> extend_from(const Embedding& a, const Embedding& b, DartId image_of_zero,
                                                 bool reflected) {
  MapIsomorphism iso;
  iso.reflected = reflected;
  iso.dart_map.assign(a.num_darts(), -1);
  iso.vertex_map.assign(a.num_vertices(), -1);
  std::vector<Vertex> vertex_used(b.num_vertices(), -1);
  std::vector<DartId> stack;
  auto assign = [&](DartId x, DartId y) -> bool {
    if (iso.dart_map[x] != -1) return iso.dart_map[x] == y;
    iso.dart_map[x] = y;
    const Vertex vx = a.tail(x);
    const Vertex vy = b.tail(y);
    if (iso.vertex_map[vx] == -1) {
      if (vertex_used[vy] != -1) return false;
      if (a.degree(vx) != b.degree(vy)) return false;
      iso.vertex_map[vx] = vy;
      vertex_used[vy] = vx;
    } else if (iso.vertex_map[vx] != vy) {
      return false;
    }
    stack.push_back(x);
    return true;
  };
  if (!assign(0, image_of_zero)) return std::nullopt;
  while (!stack.empty()) {
    DartId x = stack.back();
    stack.pop_back();
    DartId y = iso.dart_map[x];
    if (!assign(Embedding::twin(x), Embedding::twin(y))) return std::nullopt;
    if (!assign(a.rot_next(x), reflected ? b.rot_prev(y) : b.rot_next(y))) return std::nullopt;
  }
  return iso;
}

}  // namespace detail

/// All isomorphisms a -> b (orientation-preserving first, then reflected).
inline std::vector<MapIsomorphism> map_isomorphisms(const Embedding& a, const Embedding& b, bool allow_reflection,
                                                    bool first_only = false) {
  std::vector<MapIsomorphism> out;
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() || a.num_edges() == 0) return out;
  for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass)
    for (DartId y = 0; y < b.num_darts(); ++y) {
      if (auto iso = detail::extend_from(a, b, y, pass == 1)) {
        out.push_back(std::move(*iso));
        if (first_only) return out;
      }
    }
  return out;
}

inline std::optional<MapIsomorphism> find_map_isomorphism(const Embedding& a, const Embedding& b,
                                                          bool allow_reflection = true) {
  auto all = map_isomorphisms(a, b, allow_reflection, true);
  if (all.empty()) return std::nullopt;
  return std::move(all.front());
}

/// Canonical code of a connected embedding: the lexicographically least
/// breadth-first code over every starting dart (and both orientations when
/// reflections are allowed). Two embeddings are isomorphic iff their codes
/// agree. With `root`, only darts leaving that vertex start a code, which
/// identifies embeddings with a marked vertex.
inline std::vector<int> canonical_code(const Embedding& e, bool allow_reflection = true,
                                       std::optional<Vertex> root = std::nullopt) {
  const int n = e.num_vertices();
  std::vector<int> best;
  std::vector<int> label(n);
  std::vector<DartId> first(n);
  std::vector<Vertex> order;
  std::vector<int> code;
  for (int refl = 0; refl < (allow_reflection ? 2 : 1); ++refl)
    for (DartId d0 = 0; d0 < e.num_darts(); ++d0) {
      if (root && e.tail(d0) != *root) continue;
      std::fill(label.begin(), label.end(), -1);
      order.assign(1, e.tail(d0));
      label[e.tail(d0)] = 0;
      first[e.tail(d0)] = d0;
      code.clear();
      bool worse = false;
      for (std::size_t i = 0; i < order.size() && !worse; ++i) {
        const Vertex v = order[i];
        DartId d = first[v];
        do {
          const Vertex w = e.head(d);
          if (label[w] < 0) {
            label[w] = static_cast<int>(order.size());
            first[w] = Embedding::twin(d);
            order.push_back(w);
          }
          code.push_back(label[w]);
          d = refl ? e.rot_prev(d) : e.rot_next(d);
        } while (d != first[v]);
        code.push_back(-1);
        // Prune once the prefix is already larger than the best code.
        if (!best.empty()) {
          const auto cmp = std::lexicographical_compare_three_way(code.begin(), code.end(), best.begin(),
                                                                  best.begin() + std::min(code.size(), best.size()));
          if (cmp > 0) worse = true;
        }
      }
      if (!worse && (best.empty() || code < best)) best = code;
    }
  return best;
}

inline std::vector<MapIsomorphism> map_automorphisms(const Embedding& e, bool allow_reflection = true) {
  return map_isomorphisms(e, e, allow_reflection);
}

}  // namespace grunbaum
