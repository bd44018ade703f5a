#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "grunbaum/coloring.hpp"
#include "grunbaum/isomorphism.hpp"
#include "grunbaum/subgraph.hpp"
#include "grunbaum/surgery.hpp"

namespace grunbaum {

// --------------------------------------------------------- Altshuler grids

/// Grid roles double as colors: horizontal = 0, vertical = 1, diagonal = 2.
enum class GridRole : Color { Horizontal = 0, Vertical = 1, Diagonal = 2 };

/// 6-regular torus triangulation T(r,c,s) together with its grid roles.
struct GridEmbedding {
  int rows = 0;
  int cols = 0;
  int twist = 0;
  Embedding embedding;
  std::vector<Color> roles;  // per edge

  static Vertex id(int rows, int cols, int twist, int i, int j) {
    // Wrapping past the last row shifts the column by the twist.
    while (i >= rows) {
      i -= rows;
      j += twist;
    }
    while (i < 0) {
      i += rows;
      j -= twist;
    }
    j = ((j % cols) + cols) % cols;
    return i * cols + j;
  }
};

/// T(r,c,s): vertex (i,j) has id i*c+j and neighbors, counterclockwise,
/// (i,j+1), (i+1,j+1), (i+1,j), (i,j-1), (i-1,j-1), (i-1,j). Columns wrap
/// plainly; rows wrap with a shift of s columns. Throws NotSimple when the
/// parameters produce loops or parallel edges.
inline GridEmbedding gen_altshuler(int rows, int cols, int twist) {
  if (rows < 1 || cols < 1) fail(ErrorCode::PreconditionViolation, "grid dimensions must be positive");
  static constexpr std::array<std::pair<int, int>, 6> kSteps{{{0, 1}, {1, 1}, {1, 0}, {0, -1}, {-1, -1}, {-1, 0}}};
  static constexpr std::array<GridRole, 6> kRoles{GridRole::Horizontal, GridRole::Diagonal, GridRole::Vertical,
                                                  GridRole::Horizontal, GridRole::Diagonal, GridRole::Vertical};
  const std::string name =
      "T(" + std::to_string(rows) + "," + std::to_string(cols) + "," + std::to_string(twist) + ")";
  const int n = rows * cols;
  std::vector<std::vector<Vertex>> rotations(n);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Vertex v = GridEmbedding::id(rows, cols, twist, i, j);
      for (auto [di, dj] : kSteps) rotations[v].push_back(GridEmbedding::id(rows, cols, twist, i + di, j + dj));
      auto sorted = rotations[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
          std::find(sorted.begin(), sorted.end(), v) != sorted.end())
        fail(ErrorCode::NotSimple, name + " is not a simple graph");
    }
  GridEmbedding grid;
  grid.rows = rows;
  grid.cols = cols;
  grid.twist = twist;
  try {
    grid.embedding = Embedding::from_rotations(std::move(rotations));
  } catch (const Error& err) {
    fail(ErrorCode::NotSimple, name + ": " + err.what());
  }
  grid.roles.assign(grid.embedding.num_edges(), kNoColor);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const Vertex v = GridEmbedding::id(rows, cols, twist, i, j);
      for (int k = 0; k < 3; ++k) {
        auto [di, dj] = kSteps[k];
        const EdgeId e = grid.embedding.edge(v, GridEmbedding::id(rows, cols, twist, i + di, j + dj));
        grid.roles[e] = static_cast<Color>(kRoles[k]);
      }
    }
  return grid;
}

/// The grid coloring: every edge gets its role. Throws NotAGridLabeling if
/// `roles` is not a role assignment with one role of each kind per face.
inline EdgeColoring altshuler_coloring(const Embedding& e, std::span<const Color> roles) {
  if (static_cast<int>(roles.size()) != e.num_edges())
    fail(ErrorCode::NotAGridLabeling, "grid labeling does not cover every edge");
  const FaceSet faces = trace_faces(e);
  if (!is_triangulation(faces)) fail(ErrorCode::NotAGridLabeling, "embedding is not a triangulation");
  for (Color r : roles)
    if (r < 0 || r >= kNumColors) fail(ErrorCode::NotAGridLabeling, "edge without a grid role");
  if (!verify_partial(e, faces, roles).pass)
    fail(ErrorCode::NotAGridLabeling, "some face lacks one edge of each grid direction");
  return EdgeColoring(std::vector<Color>(roles.begin(), roles.end()));
}

inline EdgeColoring altshuler_coloring(const GridEmbedding& grid) { return altshuler_coloring(grid.embedding, grid.roles); }

/// Grid roles for a 6-regular torus triangulation, found by testing map
/// isomorphism against every simple T(r,c,s) with rc = V.
inline std::optional<std::vector<Color>> recognize_altshuler(const Embedding& e) {
  const int n = e.num_vertices();
  if (n == 0) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (e.degree(v) != 6) return std::nullopt;
  if (e.num_edges() != 3 * n || genus(e) != 1) return std::nullopt;
  for (int rows = 1; rows <= n; ++rows) {
    if (n % rows != 0) continue;
    const int cols = n / rows;
    for (int twist = 0; twist < cols; ++twist) {
      GridEmbedding grid;
      try {
        grid = gen_altshuler(rows, cols, twist);
      } catch (const Error&) {
        continue;
      }
      if (auto iso = find_map_isomorphism(grid.embedding, e, true)) {
        std::vector<Color> roles(e.num_edges(), kNoColor);
        for (EdgeId x = 0; x < grid.embedding.num_edges(); ++x) roles[iso->edge(x)] = grid.roles[x];
        return roles;
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------- named embeddings

enum class K6Variant { A444, B444, P54, H6 };

inline constexpr std::array<K6Variant, 4> kK6Variants{K6Variant::A444, K6Variant::B444, K6Variant::P54,
                                                      K6Variant::H6};

inline constexpr std::string_view to_string(K6Variant v) {
  switch (v) {
    case K6Variant::A444: return "444A";
    case K6Variant::B444: return "444B";
    case K6Variant::P54: return "54";
    case K6Variant::H6: return "6";
  }
  return "?";
}

inline K6Variant parse_k6_variant(std::string_view s) {
  for (K6Variant v : kK6Variants)
    if (to_string(v) == s) return v;
  fail(ErrorCode::UnknownId, "unknown K6 embedding '" + std::string(s) + "'");
}

/// An embedding of a critical 6-chromatic graph whose non-triangular faces
/// carry a fixed labeling: `labeled_faces[i]` lists the face's vertices so
/// that its edge j is (v_j, v_{j+1}). Signatures are always read in this
/// order, which fixes B1 versus B2.
struct CriticalEmbedding {
  std::string id;
  Embedding embedding;
  std::vector<std::vector<Vertex>> labeled_faces;

  std::vector<EdgeId> face_edges(int i) const {
    const auto& vs = labeled_faces[i];
    std::vector<EdgeId> out;
    for (std::size_t j = 0; j < vs.size(); ++j) out.push_back(embedding.edge(vs[j], vs[(j + 1) % vs.size()]));
    return out;
  }
};

/// The four torus embeddings of K6.
///  444A: squares (0135) (4052) (1423), pairwise sharing opposite edges (a
///        ladder); the rotation 0->4->1->0, 2->3->5->2 carries each square
///        onto the next, starts included.
///  444B: squares (0514) (3152) (1350), not laddered.
///  54:   pentagon (24051) with edges 1..5 = 24, 40, 05, 51, 12 and square
///        (5014) whose first edge 50 is the shared pentagon edge 3.
///  6:    hexagon (405231), the link of the vertex deleted from K7.
inline CriticalEmbedding gen_k6(K6Variant v) {
  using R = std::vector<std::vector<Vertex>>;
  switch (v) {
    case K6Variant::A444:
      return {"444A",
              Embedding::from_rotations(R{{1, 2, 3, 4, 5}, {0, 3, 4, 5, 2}, {0, 1, 5, 4, 3}, {0, 2, 1, 5, 4},
                                          {0, 3, 5, 1, 2}, {0, 2, 1, 4, 3}}),
              {{0, 1, 3, 5}, {4, 0, 5, 2}, {1, 4, 2, 3}}};
    case K6Variant::B444:
      return {"444B",
              Embedding::from_rotations(R{{1, 2, 3, 4, 5}, {0, 3, 5, 4, 2}, {0, 1, 4, 5, 3}, {0, 2, 1, 5, 4},
                                          {0, 3, 5, 2, 1}, {0, 1, 2, 4, 3}}),
              {{0, 5, 1, 4}, {3, 1, 5, 2}, {1, 3, 5, 0}}};
    case K6Variant::P54:
      return {"54",
              Embedding::from_rotations(R{{1, 2, 3, 4, 5}, {0, 4, 3, 5, 2}, {0, 1, 4, 5, 3}, {0, 2, 5, 1, 4},
                                          {0, 3, 1, 5, 2}, {0, 1, 3, 2, 4}}),
              {{2, 4, 0, 5, 1}, {5, 0, 1, 4}}};
    case K6Variant::H6:
      return {"6",
              Embedding::from_rotations(R{{1, 2, 3, 4, 5}, {0, 5, 3, 4, 2}, {0, 1, 4, 5, 3}, {0, 2, 1, 5, 4},
                                          {0, 3, 5, 2, 1}, {0, 2, 4, 3, 1}}),
              {{4, 0, 5, 2, 3, 1}}};
  }
  fail(ErrorCode::UnknownId, "unknown K6 embedding");
}

/// The unique torus embedding of H7 + K2 (vertex labels as in h7k2_graph);
/// one quadrilateral face (1 7 4 8).
inline CriticalEmbedding gen_h7k2() {
  using R = std::vector<std::vector<Vertex>>;
  return {"H7K2",
          Embedding::from_rotations(R{{1, 7, 6, 8, 2},
                                      {0, 2, 3, 8, 7},
                                      {0, 8, 7, 3, 1},
                                      {1, 2, 7, 4, 5, 8},
                                      {3, 7, 8, 6, 5},
                                      {3, 4, 6, 7, 8},
                                      {0, 7, 5, 4, 8},
                                      {0, 1, 4, 3, 2, 8, 5, 6},
                                      {0, 6, 4, 1, 3, 5, 7, 2}}),
          {{1, 7, 4, 8}}};
}

/// The unique torus embedding of C3 + C5 (vertex labels as in c3c5_graph);
/// one quadrilateral face (1 0 3 4).
inline CriticalEmbedding gen_c3c5() {
  using R = std::vector<std::vector<Vertex>>;
  return {"C3C5",
          Embedding::from_rotations(R{{1, 3, 7, 2, 4, 5, 6},
                                      {0, 6, 7, 3, 2, 5, 4},
                                      {0, 7, 6, 5, 1, 3, 4},
                                      {0, 4, 2, 1, 7},
                                      {0, 2, 3, 1, 5},
                                      {0, 4, 1, 2, 6},
                                      {0, 5, 2, 7, 1},
                                      {0, 3, 1, 6, 2}}),
          {{1, 0, 3, 4}}};
}

inline CriticalEmbedding critical_embedding(std::string_view id) {
  if (id == "H7K2") return gen_h7k2();
  if (id == "C3C5") return gen_c3c5();
  return gen_k6(parse_k6_variant(id));
}

inline Embedding octahedron() {
  return Embedding::from_rotations({{1, 2, 4, 3}, {0, 3, 5, 2}, {0, 1, 5, 4}, {0, 4, 5, 1}, {0, 2, 5, 3}, {1, 3, 4, 2}});
}

/// Icosahedron: poles 0 and 11, upper ring 1..5, lower ring 6..10 with
/// upper i adjacent to lower i+5 and i+6 (cyclically).
inline Embedding icosahedron() {
  std::vector<std::vector<Vertex>> faces;
  auto up = [](int i) { return 1 + ((i % 5) + 5) % 5; };
  auto lo = [](int i) { return 6 + ((i % 5) + 5) % 5; };
  for (int i = 0; i < 5; ++i) {
    faces.push_back({0, up(i), up(i + 1)});
    faces.push_back({up(i), lo(i), up(i + 1)});
    faces.push_back({up(i + 1), lo(i), lo(i + 1)});
    faces.push_back({11, lo(i + 1), lo(i)});
  }
  return Embedding::from_faces(12, faces);
}

inline constexpr std::array<std::string_view, 7> kNamedGraphs{"H7", "H7+K2", "C3+C5", "C11^3", "K7", "octahedron",
                                                              "icosahedron"};

/// Abstract graph of a named object (accepts the ids of kNamedGraphs and K6).
inline Graph gen_named_graph(std::string_view name) {
  if (name == "H7") return h7_graph();
  if (name == "H7+K2" || name == "H7K2") return h7k2_graph();
  if (name == "C3+C5" || name == "C3C5") return c3c5_graph();
  if (name == "C11^3" || name == "C11CUBED") return c11_cubed_graph();
  if (name == "K7") return complete_graph(7);
  if (name == "K6") return complete_graph(6);
  if (name == "octahedron") return octahedron().graph();
  if (name == "icosahedron") return icosahedron().graph();
  fail(ErrorCode::UnknownId, "unknown named graph '" + std::string(name) + "'");
}

/// Embedding of a named object. H7 is planar and has no distinguished
/// embedding here, so it is only available through gen_named_graph.
inline Embedding gen_named(std::string_view name) {
  if (name == "H7+K2" || name == "H7K2") return gen_h7k2().embedding;
  if (name == "C3+C5" || name == "C3C5") return gen_c3c5().embedding;
  if (name == "C11^3" || name == "C11CUBED") return gen_altshuler(1, 11, 2).embedding;
  if (name == "K7") return gen_altshuler(1, 7, 2).embedding;
  if (name == "octahedron") return octahedron();
  if (name == "icosahedron") return icosahedron();
  fail(ErrorCode::UnknownId, "no embedding for named graph '" + std::string(name) + "'");
}

// ------------------------------------------------------------ refinements

/// `steps` stellations of triangular faces chosen uniformly by a seeded
/// 64-bit Mersenne twister; reproducible per seed.
inline Embedding random_refinement(const Embedding& e, int steps, std::uint64_t seed) {
  if (!is_triangulation(e)) fail(ErrorCode::NotTriangulation, "refinement needs a triangulation");
  std::mt19937_64 rng(seed);
  Embedding current = e;
  for (int i = 0; i < steps; ++i) {
    const FaceSet faces = trace_faces(current);
    std::uniform_int_distribution<int> pick(0, faces.size() - 1);
    current = stellate_face(current, faces, pick(rng));
  }
  return current;
}

/// Up to `count` random edge flips restricted to edges not in `protected_edges`
/// (given as vertex pairs); keeps the graph simple and all degrees >= 3.
inline Embedding random_flips(const Embedding& e, int count, std::uint64_t seed,
                              const std::vector<std::pair<Vertex, Vertex>>& protected_edges = {}) {
  std::mt19937_64 rng(seed);
  Embedding current = e;
  for (int i = 0; i < count; ++i) {
    const FaceSet faces = trace_faces(current);
    std::vector<EdgeId> candidates;
    for (EdgeId x = 0; x < current.num_edges(); ++x) {
      auto [u, v] = current.endpoints(x);
      const bool locked = std::any_of(protected_edges.begin(), protected_edges.end(), [&](auto p) {
        return (p.first == u && p.second == v) || (p.first == v && p.second == u);
      });
      if (!locked && can_flip(current, faces, x)) candidates.push_back(x);
    }
    if (candidates.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    current = flip_edge(current, faces, candidates[pick(rng)]);
  }
  return current;
}

}  // namespace grunbaum
