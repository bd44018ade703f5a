#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "grunbaum/embedding.hpp"

namespace grunbaum {

using Color = std::int8_t;
inline constexpr Color kNoColor = -1;
inline constexpr int kNumColors = 3;

/// Presentation letters: colors 0, 1, 2 print as t, p, g.
inline constexpr char color_letter(Color c) { return c == 0 ? 't' : c == 1 ? 'p' : c == 2 ? 'g' : '.'; }

inline std::string color_string(std::span<const Color> colors) {
  std::string s;
  for (Color c : colors) s += color_letter(c);
  return s;
}

/// Assignment of colors to a subset of the edges; kNoColor marks uncolored.
struct PartialColoring {
  std::vector<Color> colors;

  PartialColoring() = default;
  explicit PartialColoring(int num_edges) : colors(static_cast<std::size_t>(num_edges), kNoColor) {}
  explicit PartialColoring(std::vector<Color> c) : colors(std::move(c)) {
    for (Color x : colors)
      if (x < kNoColor || x >= kNumColors) fail(ErrorCode::InvalidColor, "color " + std::to_string(x));
  }

  int size() const { return static_cast<int>(colors.size()); }
  Color operator[](EdgeId e) const { return colors[e]; }
  Color& operator[](EdgeId e) { return colors[e]; }
  bool is_colored(EdgeId e) const { return colors[e] != kNoColor; }
  int num_colored() const {
    return static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kNoColor; }));
  }
  bool complete() const { return num_colored() == size(); }
  bool operator==(const PartialColoring&) const = default;
};

/// Total assignment edge -> {0, 1, 2}.
struct EdgeColoring {
  std::vector<Color> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::vector<Color> c) : colors(std::move(c)) {
    for (Color x : colors)
      if (x < 0 || x >= kNumColors) fail(ErrorCode::ColoringIncomplete, "edge without a color in {0,1,2}");
  }
  explicit EdgeColoring(const PartialColoring& p) : EdgeColoring(p.colors) {}

  int size() const { return static_cast<int>(colors.size()); }
  Color operator[](EdgeId e) const { return colors[e]; }
  PartialColoring partial() const { return PartialColoring(colors); }
  bool operator==(const EdgeColoring&) const = default;
};

struct Violation {
  FaceId face;
  std::vector<Color> colors;
};

struct VerificationReport {
  bool pass = true;
  std::vector<Violation> violations;
  int colored_edges = 0;
  int total_edges = 0;
  int checked_triangles = 0;  // facial triangles with all three edges colored
  int total_triangles = 0;
};

/// Checks every facial triangle whose three edges are colored. Faces listed in
/// `exempt` (e.g. a disk's outer face) are skipped.
inline VerificationReport verify_partial(const Embedding& e, const FaceSet& faces, std::span<const Color> colors,
                                         std::span<const FaceId> exempt = {}) {
  if (static_cast<int>(colors.size()) != e.num_edges())
    fail(ErrorCode::PreconditionViolation, "coloring size does not match edge count");
  VerificationReport report;
  report.total_edges = e.num_edges();
  report.colored_edges = static_cast<int>(std::count_if(colors.begin(), colors.end(), [](Color c) { return c != kNoColor; }));
  for (FaceId f = 0; f < faces.size(); ++f) {
    if (faces.face_size(f) != 3) continue;
    if (std::find(exempt.begin(), exempt.end(), f) != exempt.end()) continue;
    ++report.total_triangles;
    std::vector<Color> seen;
    for (DartId d : faces.faces[f]) seen.push_back(colors[Embedding::edge_of(d)]);
    if (std::find(seen.begin(), seen.end(), kNoColor) != seen.end()) continue;
    ++report.checked_triangles;
    if (seen[0] == seen[1] || seen[1] == seen[2] || seen[0] == seen[2]) {
      report.pass = false;
      report.violations.push_back({f, seen});
    }
  }
  return report;
}

inline VerificationReport verify_partial(const Embedding& e, const PartialColoring& c) {
  return verify_partial(e, trace_faces(e), c.colors);
}

inline VerificationReport verify_grunbaum(const Embedding& e, const FaceSet& faces, std::span<const Color> colors) {
  if (!is_triangulation(faces)) fail(ErrorCode::NotTriangulation, "embedding has a non-triangular face");
  if (static_cast<int>(colors.size()) != e.num_edges() ||
      std::any_of(colors.begin(), colors.end(), [](Color c) { return c < 0 || c >= kNumColors; }))
    fail(ErrorCode::ColoringIncomplete, "coloring does not cover every edge");
  return verify_partial(e, faces, colors);
}

inline VerificationReport verify_grunbaum(const Embedding& e, const EdgeColoring& c) {
  return verify_grunbaum(e, trace_faces(e), c.colors);
}

inline VerificationReport verify_grunbaum(const Embedding& e, const PartialColoring& c) {
  return verify_grunbaum(e, trace_faces(e), c.colors);
}

/// Edge coloring induced by a proper vertex 4-coloring through the Klein
/// four-group: edge uv gets (c(u) xor c(v)) - 1. Distinct a, b, c give
/// distinct a^b, b^c, a^c, so every triangle becomes rainbow.
inline EdgeColoring tait_lift(const Embedding& e, std::span<const int> vertex_colors) {
  if (static_cast<int>(vertex_colors.size()) != e.num_vertices())
    fail(ErrorCode::ImproperVertexColoring, "vertex coloring size mismatch");
  for (int c : vertex_colors)
    if (c < 0 || c > 3) fail(ErrorCode::ImproperVertexColoring, "vertex color outside {0,1,2,3}");
  std::vector<Color> out(e.num_edges());
  for (EdgeId id = 0; id < e.num_edges(); ++id) {
    auto [u, v] = e.endpoints(id);
    const int x = vertex_colors[u] ^ vertex_colors[v];
    if (x == 0)
      fail(ErrorCode::ImproperVertexColoring,
           "adjacent vertices " + std::to_string(u) + " and " + std::to_string(v) + " share a color");
    out[id] = static_cast<Color>(x - 1);
  }
  return EdgeColoring(std::move(out));
}

/// Every color occurs with the parity of the cycle length.
inline bool parity_check(std::span<const Color> cycle_colors) {
  std::array<int, kNumColors> count{};
  for (Color c : cycle_colors) {
    if (c < 0 || c >= kNumColors) fail(ErrorCode::ColoringIncomplete, "cycle edge without a color");
    ++count[c];
  }
  const int parity = static_cast<int>(cycle_colors.size()) % 2;
  return std::all_of(count.begin(), count.end(), [parity](int n) { return n % 2 == parity; });
}

/// Colors of the given edges, in order.
inline std::vector<Color> colors_along(std::span<const Color> colors, std::span<const EdgeId> edges) {
  std::vector<Color> out;
  out.reserve(edges.size());
  for (EdgeId id : edges) out.push_back(colors[id]);
  return out;
}

/// Applies a color permutation (perm[c] is the new name of c).
inline void permute_colors(std::span<Color> colors, const std::array<Color, 3>& perm) {
  for (Color& c : colors)
    if (c != kNoColor) c = perm[c];
}

}  // namespace grunbaum
