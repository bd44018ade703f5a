#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "grunbaum/error.hpp"
#include "grunbaum/graph.hpp"

namespace grunbaum {

using EdgeId = int;
using DartId = int;
using FaceId = int;

/// Orientable rotation system of a simple connected graph.
///
/// Numbering is canonical: edges are sorted by their endpoint pair (u < v),
/// edge e owns darts 2e (u -> v) and 2e + 1 (v -> u), so twin(d) == d ^ 1.
/// Rotations list neighbors in counterclockwise order.
class Embedding {
 public:
  Embedding() = default;

  static Embedding from_rotations(std::vector<std::vector<Vertex>> rotations) {
    Embedding e;
    e.rotations_ = std::move(rotations);
    e.build();
    return e;
  }

  /// Builds the rotation system from a list of oriented faces. A face
  /// (x0, x1, ..., xk-1) forces rot_next(x_{i-1}) == x_{i+1} at x_i, which is
  /// the inverse of the face-tracing rule used by trace_faces.
  static Embedding from_faces(int num_vertices, const std::vector<std::vector<Vertex>>& faces) {
    std::vector<std::map<Vertex, Vertex>> succ(static_cast<std::size_t>(num_vertices));
    for (const auto& f : faces) {
      const std::size_t k = f.size();
      if (k < 3) fail(ErrorCode::NotACycle, "face of length < 3");
      for (std::size_t i = 0; i < k; ++i) {
        Vertex prev = f[(i + k - 1) % k];
        Vertex cur = f[i];
        Vertex next = f[(i + 1) % k];
        if (cur < 0 || cur >= num_vertices) fail(ErrorCode::InvalidVertex, "face vertex out of range");
        auto [it, inserted] = succ[cur].emplace(prev, next);
        if (!inserted) fail(ErrorCode::ParallelEdge, "face corners overlap at vertex " + std::to_string(cur));
      }
    }
    std::vector<std::vector<Vertex>> rotations(static_cast<std::size_t>(num_vertices));
    for (Vertex v = 0; v < num_vertices; ++v) {
      if (succ[v].empty()) continue;
      Vertex start = succ[v].begin()->first;
      Vertex cur = start;
      do {
        rotations[v].push_back(cur);
        auto it = succ[v].find(cur);
        if (it == succ[v].end())
          fail(ErrorCode::AsymmetricAdjacency, "faces do not close around vertex " + std::to_string(v));
        cur = it->second;
        if (rotations[v].size() > succ[v].size())
          fail(ErrorCode::NotACycle, "corners at vertex " + std::to_string(v) + " do not form one cycle");
      } while (cur != start);
      if (rotations[v].size() != succ[v].size())
        fail(ErrorCode::NotACycle, "corners at vertex " + std::to_string(v) + " do not form one cycle");
    }
    return from_rotations(std::move(rotations));
  }

  int num_vertices() const { return static_cast<int>(rotations_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_darts() const { return 2 * num_edges(); }

  const std::vector<Vertex>& rotation(Vertex v) const { return rotations_[v]; }
  const std::vector<std::vector<Vertex>>& rotations() const { return rotations_; }
  std::span<const DartId> darts_at(Vertex v) const { return darts_at_[v]; }
  int degree(Vertex v) const { return static_cast<int>(rotations_[v].size()); }

  std::pair<Vertex, Vertex> endpoints(EdgeId e) const { return edges_[e]; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  static DartId twin(DartId d) { return d ^ 1; }
  static EdgeId edge_of(DartId d) { return d >> 1; }
  Vertex tail(DartId d) const { return (d & 1) == 0 ? edges_[d >> 1].first : edges_[d >> 1].second; }
  Vertex head(DartId d) const { return tail(twin(d)); }
  DartId rot_next(DartId d) const { return rot_next_[d]; }
  DartId rot_prev(DartId d) const { return rot_prev_[d]; }

  /// Face-tracing successor: rotation-successor of the twin.
  DartId face_next(DartId d) const { return rot_next_[twin(d)]; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
    const auto& list = lookup_[u];
    auto it = std::lower_bound(list.begin(), list.end(), std::pair<Vertex, EdgeId>{v, -1});
    if (it == list.end() || it->first != v) return std::nullopt;
    return it->second;
  }

  EdgeId edge(Vertex u, Vertex v) const {
    auto e = find_edge(u, v);
    if (!e) fail(ErrorCode::InvalidVertex, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    return *e;
  }

  /// Dart u -> v.
  DartId dart(Vertex u, Vertex v) const {
    EdgeId e = edge(u, v);
    return edges_[e].first == u ? 2 * e : 2 * e + 1;
  }

  Graph graph() const { return Graph::from_edges(num_vertices(), edges_); }

  /// Same vertex count and, at every vertex, the same cyclic neighbor order
  /// (a rotation has no distinguished first neighbor).
  bool operator==(const Embedding& other) const {
    if (rotations_.size() != other.rotations_.size()) return false;
    for (std::size_t v = 0; v < rotations_.size(); ++v) {
      const auto& a = rotations_[v];
      const auto& b = other.rotations_[v];
      if (a.size() != b.size()) return false;
      if (a.empty()) continue;
      const auto start = std::find(b.begin(), b.end(), a[0]);
      if (start == b.end()) return false;
      const std::size_t offset = static_cast<std::size_t>(start - b.begin());
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(offset + i) % b.size()]) return false;
    }
    return true;
  }

 private:
  void build() {
    const int n = num_vertices();
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : rotations_[v]) {
        if (w < 0 || w >= n) fail(ErrorCode::InvalidVertex, "neighbor " + std::to_string(w) + " of vertex " + std::to_string(v));
        if (w == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(v));
      }
      std::vector<Vertex> sorted = rotations_[v];
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::ParallelEdge, "repeated neighbor at vertex " + std::to_string(v));
    }
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : rotations_[v])
        if (std::find(rotations_[w].begin(), rotations_[w].end(), v) == rotations_[w].end())
          fail(ErrorCode::AsymmetricAdjacency,
               std::to_string(w) + " listed at " + std::to_string(v) + " but not the reverse");

    edges_.clear();
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : rotations_[v])
        if (v < w) edges_.emplace_back(v, w);
    std::sort(edges_.begin(), edges_.end());

    lookup_.assign(n, {});
    for (EdgeId e = 0; e < num_edges(); ++e) {
      auto [u, v] = edges_[e];
      lookup_[u].emplace_back(v, e);
      lookup_[v].emplace_back(u, e);
    }
    for (auto& list : lookup_) std::sort(list.begin(), list.end());

    const int darts = num_darts();
    rot_next_.assign(darts, -1);
    rot_prev_.assign(darts, -1);
    darts_at_.assign(n, {});
    for (Vertex v = 0; v < n; ++v) {
      const auto& rot = rotations_[v];
      for (Vertex w : rot) darts_at_[v].push_back(dart(v, w));
      const std::size_t k = rot.size();
      for (std::size_t i = 0; i < k; ++i) {
        DartId d = darts_at_[v][i];
        rot_next_[d] = darts_at_[v][(i + 1) % k];
        rot_prev_[d] = darts_at_[v][(i + k - 1) % k];
      }
    }

    if (n > 1 && !is_connected(graph())) fail(ErrorCode::Disconnected, "embedded graph is not connected");
  }

  std::vector<std::vector<Vertex>> rotations_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> lookup_;
  std::vector<std::vector<DartId>> darts_at_;
  std::vector<DartId> rot_next_;
  std::vector<DartId> rot_prev_;
};

/// Partition of the darts into face orbits. Faces are numbered by their
/// minimal dart and each face sequence starts at that dart.
struct FaceSet {
  std::vector<std::vector<DartId>> faces;
  std::vector<FaceId> face_of_dart;

  int size() const { return static_cast<int>(faces.size()); }
  int face_size(FaceId f) const { return static_cast<int>(faces[f].size()); }

  std::vector<int> sizes() const {
    std::vector<int> out;
    for (const auto& f : faces) out.push_back(static_cast<int>(f.size()));
    return out;
  }

  /// Face sizes in non-increasing order.
  std::vector<int> census() const {
    auto out = sizes();
    std::sort(out.rbegin(), out.rend());
    return out;
  }

  std::vector<Vertex> vertices(const Embedding& e, FaceId f) const {
    std::vector<Vertex> out;
    for (DartId d : faces[f]) out.push_back(e.tail(d));
    return out;
  }

  std::vector<EdgeId> edges(FaceId f) const {
    std::vector<EdgeId> out;
    for (DartId d : faces[f]) out.push_back(Embedding::edge_of(d));
    return out;
  }
};

inline FaceSet trace_faces(const Embedding& e) {
  FaceSet fs;
  fs.face_of_dart.assign(e.num_darts(), -1);
  for (DartId start = 0; start < e.num_darts(); ++start) {
    if (fs.face_of_dart[start] != -1) continue;
    const FaceId id = fs.size();
    std::vector<DartId> face;
    DartId d = start;
    do {
      fs.face_of_dart[d] = id;
      face.push_back(d);
      d = e.face_next(d);
    } while (d != start);
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

inline int euler_characteristic(const Embedding& e, const FaceSet& faces) {
  return e.num_vertices() - e.num_edges() + faces.size();
}

inline int genus(const Embedding& e, const FaceSet& faces) {
  const int chi = euler_characteristic(e, faces);
  if (chi > 2 || (2 - chi) % 2 != 0) fail(ErrorCode::PreconditionViolation, "non-integral genus");
  return (2 - chi) / 2;
}

inline int genus(const Embedding& e) { return genus(e, trace_faces(e)); }

inline bool is_triangulation(const FaceSet& faces) {
  return std::all_of(faces.faces.begin(), faces.faces.end(), [](const auto& f) { return f.size() == 3; });
}

inline bool is_triangulation(const Embedding& e) { return is_triangulation(trace_faces(e)); }

/// Face-adjacency multigraph: dual edge i crosses host edge i.
struct DualGraph {
  std::vector<std::pair<FaceId, FaceId>> edges;       // indexed by host edge
  std::vector<std::vector<EdgeId>> incident;          // per face, host edges in face order

  int num_nodes() const { return static_cast<int>(incident.size()); }
  int degree(FaceId f) const { return static_cast<int>(incident[f].size()); }

  bool connected() const {
    if (incident.empty()) return true;
    std::vector<char> seen(incident.size(), 0);
    std::vector<FaceId> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      FaceId f = stack.back();
      stack.pop_back();
      for (EdgeId e : incident[f]) {
        FaceId g = edges[e].first == f ? edges[e].second : edges[e].first;
        if (!seen[g]) {
          seen[g] = 1;
          ++count;
          stack.push_back(g);
        }
      }
    }
    return count == incident.size();
  }
};

inline DualGraph dual_graph(const Embedding& e, const FaceSet& faces) {
  DualGraph dual;
  dual.edges.resize(e.num_edges());
  for (EdgeId id = 0; id < e.num_edges(); ++id)
    dual.edges[id] = {faces.face_of_dart[2 * id], faces.face_of_dart[2 * id + 1]};
  dual.incident.resize(faces.size());
  for (FaceId f = 0; f < faces.size(); ++f) dual.incident[f] = faces.edges(f);
  return dual;
}

inline DualGraph dual_graph(const Embedding& e) { return dual_graph(e, trace_faces(e)); }

/// Sub-embedding induced by restricting every rotation to a chosen edge set.
/// Vertex i of the result is host vertex `host_vertex[i]`.
struct SubEmbedding {
  Embedding embedding;
  std::vector<Vertex> host_vertex;
  std::vector<EdgeId> host_edge;  // sub edge -> host edge
};

inline SubEmbedding restrict_embedding(const Embedding& host, const std::vector<Vertex>& vertices,
                                       const std::vector<EdgeId>& edges) {
  std::vector<int> local(host.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<char> keep(host.num_edges(), 0);
  for (EdgeId e : edges) {
    auto [u, v] = host.endpoints(e);
    if (local[u] < 0 || local[v] < 0) fail(ErrorCode::InvalidVertex, "edge endpoint outside the vertex subset");
    keep[e] = 1;
  }
  std::vector<std::vector<Vertex>> rotations(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (DartId d : host.darts_at(vertices[i]))
      if (keep[Embedding::edge_of(d)]) rotations[i].push_back(local[host.head(d)]);
  SubEmbedding sub{Embedding::from_rotations(std::move(rotations)), vertices, {}};
  for (auto [u, v] : sub.embedding.edges()) sub.host_edge.push_back(host.edge(vertices[u], vertices[v]));
  return sub;
}

}  // namespace grunbaum
