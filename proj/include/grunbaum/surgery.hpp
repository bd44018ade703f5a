#pragma once

#include <algorithm>
#include <vector>

#include "grunbaum/embedding.hpp"

namespace grunbaum {

/// Faces as vertex cycles, in face-id order.
inline std::vector<std::vector<Vertex>> face_vertex_lists(const Embedding& e, const FaceSet& faces) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(faces.size());
  for (FaceId f = 0; f < faces.size(); ++f) out.push_back(faces.vertices(e, f));
  return out;
}

/// Inserts a new vertex (id V) inside face f and joins it to every corner.
/// The face boundary must visit distinct vertices.
inline Embedding add_vertex_in_face(const Embedding& e, const FaceSet& faces, FaceId f) {
  auto lists = face_vertex_lists(e, faces);
  std::vector<Vertex> corners = lists[f];
  auto sorted = corners;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::NotACycle, "face " + std::to_string(f) + " revisits a vertex");
  const Vertex apex = e.num_vertices();
  lists.erase(lists.begin() + f);
  const std::size_t k = corners.size();
  for (std::size_t i = 0; i < k; ++i) lists.push_back({corners[i], corners[(i + 1) % k], apex});
  return Embedding::from_faces(e.num_vertices() + 1, lists);
}

inline Embedding stellate_face(const Embedding& e, const FaceSet& faces, FaceId f) {
  if (f < 0 || f >= faces.size()) fail(ErrorCode::UnknownId, "face " + std::to_string(f));
  if (faces.face_size(f) != 3) fail(ErrorCode::FaceNotTriangle, "face " + std::to_string(f) + " has size " + std::to_string(faces.face_size(f)));
  return add_vertex_in_face(e, faces, f);
}

inline Embedding stellate_face(const Embedding& e, FaceId f) { return stellate_face(e, trace_faces(e), f); }

/// Fills face f (corners c_0..c_{k-1}, read from `offset`) with two new
/// adjacent vertices: x joined to c_0..c_m and y joined to c_m..c_{k-1}, c_0,
/// where m = k/2. Unlike a single apex, this never turns a k-face into a
/// wheel whose hub sees every corner, so it keeps K7 out of filled K6
/// hexagons.
inline Embedding split_fill_face(const Embedding& e, const FaceSet& faces, FaceId f, int offset = 0) {
  auto lists = face_vertex_lists(e, faces);
  const std::vector<Vertex> face = lists[f];
  const int k = static_cast<int>(face.size());
  if (k < 3) fail(ErrorCode::PreconditionViolation, "face " + std::to_string(f) + " is degenerate");
  auto sorted = face;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::NotACycle, "face " + std::to_string(f) + " revisits a vertex");
  std::vector<Vertex> c(k);
  for (int i = 0; i < k; ++i) c[i] = face[((i + offset) % k + k) % k];
  const Vertex x = e.num_vertices();
  const Vertex y = x + 1;
  const int m = k / 2;
  lists.erase(lists.begin() + f);
  for (int i = 0; i < m; ++i) lists.push_back({c[i], c[i + 1], x});
  lists.push_back({x, c[m], y});
  for (int i = m; i < k; ++i) lists.push_back({c[i], c[(i + 1) % k], y});
  lists.push_back({y, c[0], x});
  return Embedding::from_faces(e.num_vertices() + 2, lists);
}

/// Split-fills every non-triangular face; `offsets[i]` (cycled) chooses the
/// starting corner of the i-th filled face.
inline Embedding split_fill_faces(const Embedding& e, const std::vector<int>& offsets = {0}) {
  Embedding current = e;
  for (int filled = 0;; ++filled) {
    const FaceSet faces = trace_faces(current);
    FaceId target = -1;
    for (FaceId f = 0; f < faces.size() && target < 0; ++f)
      if (faces.face_size(f) > 3) target = f;
    if (target < 0) return current;
    const int offset = offsets.empty() ? 0 : offsets[filled % offsets.size()];
    current = split_fill_face(current, faces, target, offset);
  }
}

/// Whether edge `id` can be flipped inside a triangulated neighborhood without
/// creating a parallel edge or a vertex of degree < 3.
inline bool can_flip(const Embedding& e, const FaceSet& faces, EdgeId id) {
  const FaceId f1 = faces.face_of_dart[2 * id];
  const FaceId f2 = faces.face_of_dart[2 * id + 1];
  if (f1 == f2 || faces.face_size(f1) != 3 || faces.face_size(f2) != 3) return false;
  auto [a, b] = e.endpoints(id);
  if (e.degree(a) <= 3 || e.degree(b) <= 3) return false;
  const Vertex c = e.head(e.face_next(2 * id));
  const Vertex d = e.head(e.face_next(2 * id + 1));
  return c != d && c != a && c != b && d != a && d != b && !e.find_edge(c, d);
}

/// Replaces edge a-b, shared by triangles (a,b,c) and (b,a,d), with c-d.
inline Embedding flip_edge(const Embedding& e, const FaceSet& faces, EdgeId id) {
  if (!can_flip(e, faces, id)) fail(ErrorCode::PreconditionViolation, "edge " + std::to_string(id) + " cannot be flipped");
  auto [a, b] = e.endpoints(id);
  const Vertex c = e.head(e.face_next(2 * id));
  const Vertex d = e.head(e.face_next(2 * id + 1));
  const FaceId f1 = faces.face_of_dart[2 * id];
  const FaceId f2 = faces.face_of_dart[2 * id + 1];
  std::vector<std::vector<Vertex>> lists;
  for (FaceId f = 0; f < faces.size(); ++f)
    if (f != f1 && f != f2) lists.push_back(faces.vertices(e, f));
  lists.push_back({a, d, c});
  lists.push_back({d, b, c});
  return Embedding::from_faces(e.num_vertices(), lists);
}

/// Mirror image: every rotation reversed.
inline Embedding mirror(const Embedding& e) {
  auto rotations = e.rotations();
  for (auto& r : rotations) std::reverse(r.begin(), r.end());
  return Embedding::from_rotations(std::move(rotations));
}

/// Relabels vertices: vertex v becomes perm[v].
inline Embedding relabel(const Embedding& e, const std::vector<Vertex>& perm) {
  std::vector<std::vector<Vertex>> rotations(e.num_vertices());
  for (Vertex v = 0; v < e.num_vertices(); ++v)
    for (Vertex w : e.rotation(v)) rotations[perm[v]].push_back(perm[w]);
  return Embedding::from_rotations(std::move(rotations));
}

}  // namespace grunbaum
