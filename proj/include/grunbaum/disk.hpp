#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "grunbaum/embedding.hpp"
#include "grunbaum/surgery.hpp"

namespace grunbaum {

/// Closed walk v0 -> v1 -> ... -> v(k-1) -> v0 through consecutive edges.
struct FaceCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  FaceCycle reversed() const {
    FaceCycle r{vertices};
    std::reverse(r.vertices.begin() + 1, r.vertices.end());
    return r;
  }
};

/// Cycle following face f of e.
inline FaceCycle face_cycle(const Embedding& e, const FaceSet& faces, FaceId f) { return {faces.vertices(e, f)}; }

/// Darts v_i -> v_{i+1}; throws NotACycle unless the walk is a simple cycle of e.
inline std::vector<DartId> cycle_darts(const Embedding& e, const FaceCycle& c) {
  const int k = c.length();
  if (k < 3) fail(ErrorCode::NotACycle, "cycle shorter than 3");
  auto sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(ErrorCode::NotACycle, "cycle repeats a vertex");
  std::vector<DartId> darts;
  for (int i = 0; i < k; ++i) {
    Vertex u = c.vertices[i];
    Vertex v = c.vertices[(i + 1) % k];
    if (!e.find_edge(u, v)) fail(ErrorCode::NotACycle, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    darts.push_back(e.dart(u, v));
  }
  return darts;
}

/// Result of cutting the surface along a cycle. The interior side is the one
/// containing the face of dart v0 -> v1.
struct Separation {
  bool separating = false;
  /// Set when a side holds no vertex off the cycle (e.g. a facial triangle).
  bool empty_side = false;
  std::vector<FaceId> interior_faces;
  std::vector<FaceId> exterior_faces;
  std::vector<Vertex> interior_vertices;
  std::vector<Vertex> exterior_vertices;
};

inline Separation is_separating(const Embedding& e, const FaceSet& faces, const FaceCycle& c) {
  const auto darts = cycle_darts(e, c);
  std::vector<char> on_cycle_edge(e.num_edges(), 0);
  for (DartId d : darts) on_cycle_edge[Embedding::edge_of(d)] = 1;
  std::vector<char> on_cycle_vertex(e.num_vertices(), 0);
  for (Vertex v : c.vertices) on_cycle_vertex[v] = 1;

  std::vector<int> side(faces.size(), -1);
  auto flood = [&](FaceId seed, int label) {
    std::vector<FaceId> out{seed};
    side[seed] = label;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (DartId d : faces.faces[out[i]]) {
        if (on_cycle_edge[Embedding::edge_of(d)]) continue;
        FaceId g = faces.face_of_dart[Embedding::twin(d)];
        if (side[g] == -1) {
          side[g] = label;
          out.push_back(g);
        }
      }
    return out;
  };

  Separation sep;
  sep.interior_faces = flood(faces.face_of_dart[darts[0]], 0);
  const FaceId outside_seed = faces.face_of_dart[Embedding::twin(darts[0])];
  if (side[outside_seed] != -1) return sep;
  sep.exterior_faces = flood(outside_seed, 1);
  for (DartId d : darts)
    if (side[faces.face_of_dart[d]] != 0 || side[faces.face_of_dart[Embedding::twin(d)]] != 1) return Separation{};
  sep.separating = true;

  auto collect = [&](const std::vector<FaceId>& fs) {
    std::vector<Vertex> vs;
    for (FaceId f : fs)
      for (DartId d : faces.faces[f])
        if (!on_cycle_vertex[e.tail(d)]) vs.push_back(e.tail(d));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  };
  sep.interior_vertices = collect(sep.interior_faces);
  sep.exterior_vertices = collect(sep.exterior_faces);
  sep.empty_side = sep.interior_vertices.empty() || sep.exterior_vertices.empty();
  return sep;
}

enum class Side { Interior, Exterior };

/// Planar embedding of one side of a separating cycle. Boundary vertices are
/// numbered 0..k-1 in cycle order, interior vertices follow in host-id order.
/// Inner faces contain the darts i -> i+1; the outer face holds their twins.
struct Disk {
  Embedding embedding;
  std::vector<Vertex> boundary;
  std::vector<EdgeId> boundary_edges;  // boundary_edges[i] joins boundary[i], boundary[i+1]
  FaceId outer_face = -1;
  std::vector<Vertex> host_vertex;
  std::vector<EdgeId> host_edge;

  int boundary_length() const { return static_cast<int>(boundary.size()); }
  int interior_vertex_count() const { return embedding.num_vertices() - boundary_length(); }
};

namespace detail {

inline Disk finish_disk(Embedding emb, std::vector<Vertex> boundary, std::vector<Vertex> host_vertex,
                        std::vector<EdgeId> host_edge) {
  Disk disk;
  disk.embedding = std::move(emb);
  disk.boundary = std::move(boundary);
  disk.host_vertex = std::move(host_vertex);
  disk.host_edge = std::move(host_edge);
  const int k = disk.boundary_length();
  for (int i = 0; i < k; ++i)
    disk.boundary_edges.push_back(disk.embedding.edge(disk.boundary[i], disk.boundary[(i + 1) % k]));
  const FaceSet faces = trace_faces(disk.embedding);
  disk.outer_face = faces.face_of_dart[disk.embedding.dart(disk.boundary[1], disk.boundary[0])];
  return disk;
}

}  // namespace detail

inline Disk extract_disk(const Embedding& e, const FaceSet& faces, const FaceCycle& cycle, Side side) {
  const FaceCycle c = side == Side::Interior ? cycle : cycle.reversed();
  const Separation sep = is_separating(e, faces, c);
  if (!sep.separating) fail(ErrorCode::SideNotADisk, "cycle does not separate the surface");

  std::vector<char> in_side(faces.size(), 0);
  for (FaceId f : sep.interior_faces) in_side[f] = 1;
  std::vector<char> keep_edge(e.num_edges(), 0);
  for (FaceId f : sep.interior_faces)
    for (DartId d : faces.faces[f]) keep_edge[Embedding::edge_of(d)] = 1;

  std::vector<Vertex> order = c.vertices;
  order.insert(order.end(), sep.interior_vertices.begin(), sep.interior_vertices.end());
  std::vector<int> local(e.num_vertices(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[order[i]] = static_cast<int>(i);

  std::vector<std::vector<Vertex>> rotations(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (DartId d : e.darts_at(order[i]))
      if (keep_edge[Embedding::edge_of(d)]) {
        Vertex w = e.head(d);
        if (local[w] < 0) fail(ErrorCode::SideNotADisk, "side touches a vertex outside the region");
        rotations[i].push_back(local[w]);
      }

  Embedding emb;
  try {
    emb = Embedding::from_rotations(std::move(rotations));
  } catch (const Error& err) {
    fail(ErrorCode::SideNotADisk, err.what());
  }
  const FaceSet disk_faces = trace_faces(emb);
  const int k = c.length();
  if (genus(emb, disk_faces) != 0 || disk_faces.size() != static_cast<int>(sep.interior_faces.size()) + 1 ||
      disk_faces.face_size(disk_faces.face_of_dart[emb.dart(1, 0)]) != k)
    fail(ErrorCode::SideNotADisk, "chosen side is not a disk");

  std::vector<Vertex> boundary(k);
  for (int i = 0; i < k; ++i) boundary[i] = i;
  std::vector<EdgeId> host_edge;
  for (auto [u, v] : emb.edges()) host_edge.push_back(e.edge(order[u], order[v]));
  return detail::finish_disk(std::move(emb), std::move(boundary), std::move(order), std::move(host_edge));
}

inline Disk extract_disk(const Embedding& e, const FaceCycle& cycle, Side side) {
  return extract_disk(e, trace_faces(e), cycle, side);
}

/// Treats a planar embedding as a disk whose outer boundary is face `outer`.
inline Disk make_disk(const Embedding& planar, FaceId outer) {
  const FaceSet faces = trace_faces(planar);
  if (genus(planar, faces) != 0) fail(ErrorCode::SideNotADisk, "embedding is not planar");
  const auto around = faces.vertices(planar, outer);
  std::vector<Vertex> boundary{around[0]};
  for (std::size_t i = around.size() - 1; i >= 1; --i) boundary.push_back(around[i]);
  auto sorted = boundary;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(ErrorCode::SideNotADisk, "outer face is not a simple cycle");
  std::vector<Vertex> host_vertex(planar.num_vertices());
  for (Vertex v = 0; v < planar.num_vertices(); ++v) host_vertex[v] = v;
  std::vector<EdgeId> host_edge(planar.num_edges());
  for (EdgeId id = 0; id < planar.num_edges(); ++id) host_edge[id] = id;
  return detail::finish_disk(planar, std::move(boundary), std::move(host_vertex), std::move(host_edge));
}

/// Planar triangulation obtained by placing a new vertex (id V) in the outer
/// face and joining it to every boundary vertex.
inline Embedding cap_with_apex(const Disk& disk) {
  if (disk.boundary_length() < 3) fail(ErrorCode::PreconditionViolation, "boundary shorter than 3");
  return add_vertex_in_face(disk.embedding, trace_faces(disk.embedding), disk.outer_face);
}

}  // namespace grunbaum
