#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "grunbaum/coloring.hpp"

namespace grunbaum {

/// Component of the edges colored a or b under dual adjacency (two edges are
/// adjacent when they lie on a common face that is not exempt).
struct KempeChain {
  Color a = 0;
  Color b = 1;
  std::vector<EdgeId> edges;  // sorted
  bool is_cycle = false;       // every chain edge has exactly two chain neighbors
};

inline KempeChain kempe_chain(const Embedding& e, const FaceSet& faces, std::span<const Color> colors, EdgeId seed,
                              Color a, Color b, std::span<const FaceId> exempt = {}) {
  if (a == b || a < 0 || b < 0 || a >= kNumColors || b >= kNumColors)
    fail(ErrorCode::PreconditionViolation, "Kempe chain needs two distinct colors");
  if (seed < 0 || seed >= e.num_edges()) fail(ErrorCode::UnknownId, "edge " + std::to_string(seed));
  if (colors[seed] != a && colors[seed] != b)
    fail(ErrorCode::SeedNotInColors, "seed edge " + std::to_string(seed) + " is not colored with either chain color");

  std::vector<char> is_exempt(faces.size(), 0);
  for (FaceId f : exempt) is_exempt[f] = 1;
  auto in_pair = [&](EdgeId x) { return colors[x] == a || colors[x] == b; };

  KempeChain chain{a, b, {}, true};
  std::vector<char> seen(e.num_edges(), 0);
  std::vector<EdgeId> queue{seed};
  seen[seed] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const EdgeId x = queue[i];
    int neighbors = 0;
    for (DartId d : {2 * x, 2 * x + 1}) {
      const FaceId f = faces.face_of_dart[d];
      if (is_exempt[f]) continue;
      for (DartId other : faces.faces[f]) {
        const EdgeId y = Embedding::edge_of(other);
        if (y == x || !in_pair(y)) continue;
        ++neighbors;
        if (!seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
    if (neighbors != 2) chain.is_cycle = false;
  }
  std::sort(queue.begin(), queue.end());
  chain.edges = std::move(queue);
  return chain;
}

/// Swaps a and b along the chain through `seed`. Applying the same change
/// twice restores the input.
inline std::vector<Color> kempe_change(const Embedding& e, const FaceSet& faces, std::span<const Color> colors,
                                       EdgeId seed, Color a, Color b, std::span<const FaceId> exempt = {}) {
  const KempeChain chain = kempe_chain(e, faces, colors, seed, a, b, exempt);
  std::vector<Color> out(colors.begin(), colors.end());
  for (EdgeId x : chain.edges) out[x] = out[x] == a ? b : a;
  return out;
}

inline EdgeColoring kempe_change(const Embedding& e, const EdgeColoring& c, EdgeId seed, Color a, Color b) {
  return EdgeColoring(kempe_change(e, trace_faces(e), c.colors, seed, a, b));
}

inline PartialColoring kempe_change(const Embedding& e, const PartialColoring& c, EdgeId seed, Color a, Color b,
                                    std::span<const FaceId> exempt = {}) {
  return PartialColoring(kempe_change(e, trace_faces(e), c.colors, seed, a, b, exempt));
}

}  // namespace grunbaum
