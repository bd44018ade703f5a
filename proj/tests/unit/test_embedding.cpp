#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "grunbaum.hpp"
#include "support/corpus.hpp"

namespace grunbaum {
namespace {

/// Toroidal K7: the neighbours of i in the order i+1, i+3, i+2, i+6, i+4, i+5.
Embedding k7_canonical() {
  std::vector<std::vector<Vertex>> rot(7);
  for (int i = 0; i < 7; ++i)
    for (int d : {1, 3, 2, 6, 4, 5}) rot[i].push_back((i + d) % 7);
  return Embedding::from_rotations(rot);
}

/// K7 with the neighbours of i in cyclic order i+1, ..., i+6.
Embedding k7_cyclic() {
  std::vector<std::vector<Vertex>> rot(7);
  for (int i = 0; i < 7; ++i)
    for (int d = 1; d <= 6; ++d) rot[i].push_back((i + d) % 7);
  return Embedding::from_rotations(rot);
}

std::vector<Embedding> catalog_embeddings() {
  std::vector<Embedding> out{octahedron(), icosahedron(), k7_canonical(), gen_altshuler(3, 3, 0).embedding,
                             gen_named("C11^3"), gen_h7k2().embedding, gen_c3c5().embedding};
  for (K6Variant v : kK6Variants) out.push_back(gen_k6(v).embedding);
  return out;
}

ErrorCode error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::PreconditionViolation;
}

// ----------------------------------------------------------- build_embedding

TEST(BuildEmbedding, Octahedron) {
  const Embedding e = octahedron();
  EXPECT_EQ(e.num_vertices(), 6);
  EXPECT_EQ(e.num_edges(), 12);
}

TEST(BuildEmbedding, K7CyclicRotation) {
  const Embedding e = k7_cyclic();
  EXPECT_EQ(e.num_vertices(), 7);
  EXPECT_EQ(e.num_edges(), 21);
}

TEST(BuildEmbedding, AsymmetricAdjacencyRejected) {
  // Vertex 1 lists 3, but 3 does not list 1.
  std::vector<std::vector<Vertex>> rot{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 2}};
  EXPECT_EQ(error_of([&] { Embedding::from_rotations(rot); }), ErrorCode::AsymmetricAdjacency);
}

TEST(BuildEmbedding, LoopsAndParallelEdgesRejected) {
  EXPECT_EQ(error_of([] { Embedding::from_rotations({{0, 1}, {0}}); }), ErrorCode::LoopEdge);
  EXPECT_EQ(error_of([] { Embedding::from_rotations({{1, 1}, {0, 0}}); }), ErrorCode::ParallelEdge);
  EXPECT_EQ(error_of([] { Embedding::from_rotations({{5}, {0}}); }), ErrorCode::InvalidVertex);
}

TEST(BuildEmbedding, CanonicalEdgeNumbering) {
  const Embedding e = octahedron();
  for (EdgeId x = 0; x < e.num_edges(); ++x) {
    auto [u, v] = e.endpoints(x);
    EXPECT_LT(u, v);
    if (x > 0) { EXPECT_LT(e.endpoints(x - 1), e.endpoints(x)); }
    EXPECT_EQ(e.tail(2 * x), u);
    EXPECT_EQ(e.head(2 * x), v);
  }
}

// ---------------------------------------------------------------- trace_faces

TEST(TraceFaces, Octahedron) {
  const FaceSet f = trace_faces(octahedron());
  EXPECT_EQ(f.size(), 8);
  EXPECT_EQ(f.census(), std::vector<int>(8, 3));
}

TEST(TraceFaces, K6FiveFour) {
  const FaceSet f = trace_faces(gen_k6(K6Variant::P54).embedding);
  EXPECT_EQ(f.census(), (std::vector<int>{5, 4, 3, 3, 3, 3, 3, 3, 3}));
}

TEST(TraceFaces, K7CanonicalRotation) {
  const FaceSet f = trace_faces(k7_canonical());
  EXPECT_EQ(f.size(), 14);
  EXPECT_EQ(f.census(), std::vector<int>(14, 3));
}

TEST(TraceFaces, FacesFollowTwinThenRotationSuccessor) {
  const Embedding e = icosahedron();
  const FaceSet f = trace_faces(e);
  for (const auto& face : f.faces)
    for (std::size_t i = 0; i < face.size(); ++i)
      EXPECT_EQ(face[(i + 1) % face.size()], e.rot_next(Embedding::twin(face[i])));
}

// ---------------------------------------------------------------------- genus

TEST(Genus, Examples) {
  EXPECT_EQ(genus(octahedron()), 0);
  EXPECT_EQ(genus(k7_canonical()), 1);
  const Embedding a = gen_k6(K6Variant::A444).embedding;
  EXPECT_EQ(genus(a), 1);
  EXPECT_EQ(trace_faces(a).size(), 9);
  EXPECT_EQ(trace_faces(a).census(), (std::vector<int>{4, 4, 4, 3, 3, 3, 3, 3, 3}));
}

// ----------------------------------------------------------- is_triangulation

TEST(IsTriangulation, Examples) {
  EXPECT_TRUE(is_triangulation(gen_altshuler(3, 3, 0).embedding));
  EXPECT_FALSE(is_triangulation(gen_k6(K6Variant::H6).embedding));
  EXPECT_TRUE(is_triangulation(octahedron()));
}

// ------------------------------------------------------------------ dual_graph

TEST(DualGraph, K7IsCubic) {
  const DualGraph d = dual_graph(k7_canonical());
  EXPECT_EQ(d.num_nodes(), 14);
  for (FaceId f = 0; f < d.num_nodes(); ++f) EXPECT_EQ(d.degree(f), 3);
  EXPECT_TRUE(d.connected());
}

TEST(DualGraph, OctahedronIsCube) {
  const DualGraph d = dual_graph(octahedron());
  EXPECT_EQ(d.num_nodes(), 8);
  EXPECT_EQ(d.edges.size(), 12u);
  for (FaceId f = 0; f < 8; ++f) EXPECT_EQ(d.degree(f), 3);
  // The cube is bipartite.
  std::vector<int> side(8, -1);
  side[0] = 0;
  for (int round = 0; round < 8; ++round)
    for (auto [a, b] : d.edges) {
      if (side[a] >= 0 && side[b] < 0) side[b] = 1 - side[a];
      if (side[b] >= 0 && side[a] < 0) side[a] = 1 - side[b];
    }
  for (auto [a, b] : d.edges) EXPECT_NE(side[a], side[b]);
}

TEST(DualGraph, K6FiveFourDegrees) {
  const DualGraph d = dual_graph(gen_k6(K6Variant::P54).embedding);
  std::vector<int> degrees;
  for (FaceId f = 0; f < d.num_nodes(); ++f) degrees.push_back(d.degree(f));
  std::sort(degrees.rbegin(), degrees.rend());
  EXPECT_EQ(degrees, (std::vector<int>{5, 4, 3, 3, 3, 3, 3, 3, 3}));
}

// --------------------------------------------------------------- is_separating

TEST(IsSeparating, FacialTriangleHasEmptySide) {
  const Embedding e = octahedron();
  const FaceSet faces = trace_faces(e);
  const Separation s = is_separating(e, faces, face_cycle(e, faces, 0));
  EXPECT_TRUE(s.separating);
  EXPECT_TRUE(s.empty_side);
}

TEST(IsSeparating, SquareCappedInsideAndOut) {
  // Square 0-1-2-3 with apex 4 on one side and apex 5 on the other.
  const Embedding e = Embedding::from_faces(
      6, {{0, 1, 4}, {1, 2, 4}, {2, 3, 4}, {3, 0, 4}, {1, 0, 5}, {2, 1, 5}, {3, 2, 5}, {0, 3, 5}});
  const FaceSet faces = trace_faces(e);
  const Separation s = is_separating(e, faces, FaceCycle{{0, 1, 2, 3}});
  EXPECT_TRUE(s.separating);
  EXPECT_FALSE(s.empty_side);
  EXPECT_EQ(s.interior_vertices.size() + s.exterior_vertices.size(), 2u);
}

TEST(IsSeparating, NonContractibleGridCycle) {
  // Row 0 of T(3,3,0): vertices 0, 1, 2 joined horizontally.
  const Embedding e = gen_altshuler(3, 3, 0).embedding;
  const Separation s = is_separating(e, trace_faces(e), FaceCycle{{0, 1, 2}});
  EXPECT_FALSE(s.separating);
}

// ---------------------------------------------------------------- extract_disk

TEST(ExtractDisk, HexagonOfSixRefinement) {
  const Embedding six = gen_k6(K6Variant::H6).embedding;
  const Embedding refined = split_fill_faces(six);
  const FaceCycle hexagon{{4, 0, 5, 2, 3, 1}};
  const Disk d = extract_disk(refined, hexagon, Side::Interior);
  EXPECT_EQ(d.boundary_length(), 6);
  EXPECT_EQ(d.interior_vertex_count(), 2);
  const FaceSet faces = trace_faces(d.embedding);
  EXPECT_EQ(genus(d.embedding, faces), 0);
  EXPECT_EQ(faces.face_size(d.outer_face), 6);
  for (FaceId f = 0; f < faces.size(); ++f)
    if (f != d.outer_face) { EXPECT_EQ(faces.face_size(f), 3); }
  for (int i = 0; i < 6; ++i) EXPECT_EQ(d.host_vertex[d.boundary[i]], hexagon.vertices[i]);
}

TEST(ExtractDisk, FaceWithoutInteriorVertices) {
  const Embedding e = octahedron();
  const FaceSet faces = trace_faces(e);
  const FaceCycle c = face_cycle(e, faces, 3);
  const Disk d = extract_disk(e, faces, c, Side::Interior);
  EXPECT_EQ(d.embedding.num_vertices(), 3);
  EXPECT_EQ(d.embedding.num_edges(), 3);
  EXPECT_EQ(trace_faces(d.embedding).size(), 2);
}

TEST(ExtractDisk, NonSeparatingCycleRejected) {
  const Embedding e = gen_altshuler(3, 3, 0).embedding;
  EXPECT_EQ(error_of([&] { extract_disk(e, FaceCycle{{0, 1, 2}}, Side::Interior); }), ErrorCode::SideNotADisk);
}

// ---------------------------------------------------------------- cap_with_apex

TEST(CapWithApex, Triangle) {
  const Disk d = make_disk(Embedding::from_faces(3, {{0, 1, 2}, {0, 2, 1}}), 1);
  const Embedding k4 = cap_with_apex(d);
  EXPECT_EQ(k4.num_vertices(), 4);
  EXPECT_EQ(k4.num_edges(), 6);
  EXPECT_EQ(genus(k4), 0);
  EXPECT_TRUE(is_triangulation(k4));
}

TEST(CapWithApex, SquareWithDiagonal) {
  const Embedding square = Embedding::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 2, 1}});
  const Disk d = make_disk(square, trace_faces(square).face_of_dart[square.dart(0, 3)]);
  const Embedding capped = cap_with_apex(d);
  EXPECT_EQ(capped.num_vertices(), 5);
  EXPECT_EQ(capped.degree(4), 4);
  EXPECT_TRUE(is_triangulation(capped));
  EXPECT_EQ(genus(capped), 0);
}

TEST(CapWithApex, TriangulatedPentagon) {
  for (const auto& bd : support::boundary_disks(5, 2)) {
    const Embedding capped = cap_with_apex(bd.disk);
    EXPECT_EQ(genus(capped), 0);
    EXPECT_TRUE(is_triangulation(capped));
    EXPECT_EQ(capped.degree(capped.num_vertices() - 1), 5);
  }
}

TEST(CapWithApex, ExtractThenCapIsPlanarTriangulation) {
  for (const auto& p : support::parity_instances(3)) {
    for (Side side : {Side::Interior, Side::Exterior}) {
      const Embedding capped = cap_with_apex(extract_disk(p.embedding, p.cycle, side));
      EXPECT_EQ(genus(capped), 0) << p.name;
      EXPECT_TRUE(is_triangulation(capped)) << p.name;
    }
  }
}

// ---------------------------------------------------------------- stellate_face

TEST(StellateFace, Octahedron) {
  const Embedding e = stellate_face(octahedron(), 2);
  EXPECT_EQ(e.num_vertices(), 7);
  EXPECT_EQ(e.num_edges(), 15);
  EXPECT_EQ(genus(e), 0);
}

TEST(StellateFace, K7) {
  const Embedding e = stellate_face(k7_canonical(), 5);
  EXPECT_EQ(e.num_vertices(), 8);
  EXPECT_EQ(e.num_edges(), 24);
  EXPECT_EQ(genus(e), 1);
}

TEST(StellateFace, TwiceInTheSameRegion) {
  const Embedding once = stellate_face(k7_canonical(), 0);
  // Pick a face incident to the new vertex 7.
  const FaceSet faces = trace_faces(once);
  const FaceId f = faces.face_of_dart[once.darts_at(7)[0]];
  const Embedding twice = stellate_face(once, faces, f);
  EXPECT_EQ(twice.num_vertices(), 9);
  EXPECT_EQ(genus(twice), 1);
  EXPECT_TRUE(is_triangulation(twice));
}

TEST(StellateFace, NonTriangleRejected) {
  const Embedding e = gen_k6(K6Variant::H6).embedding;
  const FaceSet faces = trace_faces(e);
  FaceId hex = 0;
  while (faces.face_size(hex) != 6) ++hex;
  EXPECT_EQ(error_of([&] { stellate_face(e, faces, hex); }), ErrorCode::FaceNotTriangle);
}

TEST(SplitFill, KeepsGenusAndTriangulates) {
  for (K6Variant v : kK6Variants)
    for (int offset = 0; offset < 3; ++offset) {
      const Embedding e = split_fill_faces(gen_k6(v).embedding, {offset});
      EXPECT_TRUE(is_triangulation(e));
      EXPECT_EQ(genus(e), 1);
      // No new K7: the filled hexagon's two vertices see at most four corners each.
      EXPECT_FALSE(find_subgraph(e.graph(), Pattern::K7).has_value());
    }
}

// ------------------------------------------------------------------ invariants

TEST(EmbeddingInvariants, DartInvolutionAndFacePartition) {
  for (const Embedding& e : catalog_embeddings()) {
    for (DartId d = 0; d < e.num_darts(); ++d) {
      EXPECT_NE(Embedding::twin(d), d);
      EXPECT_EQ(Embedding::twin(Embedding::twin(d)), d);
      EXPECT_EQ(e.tail(Embedding::twin(d)), e.head(d));
    }
    const FaceSet f = trace_faces(e);
    const auto sizes = f.sizes();
    EXPECT_EQ(std::accumulate(sizes.begin(), sizes.end(), 0), 2 * e.num_edges());
    for (DartId d = 0; d < e.num_darts(); ++d) EXPECT_GE(f.face_of_dart[d], 0);
    const int chi = euler_characteristic(e, f);
    EXPECT_TRUE(chi == 2 || chi == 0);
  }
}

TEST(EmbeddingInvariants, GenusStableUnderStellation) {
  for (const Embedding& e : catalog_embeddings()) {
    if (!is_triangulation(e)) continue;
    EXPECT_EQ(genus(random_refinement(e, 6, 11)), genus(e));
  }
}

TEST(EmbeddingInvariants, DualOfTriangulationIsCubicAndConnected) {
  for (const auto& inst : support::torus_corpus()) {
    const DualGraph d = dual_graph(inst.embedding);
    EXPECT_TRUE(d.connected()) << inst.name;
    for (FaceId f = 0; f < d.num_nodes(); ++f) ASSERT_EQ(d.degree(f), 3) << inst.name;
  }
}

// ------------------------------------------------------------- canonical codes

TEST(CanonicalCode, InvariantUnderRelabelingAndMirror) {
  const Embedding e = random_refinement(icosahedron(), 5, 3);
  std::vector<Vertex> perm(e.num_vertices());
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin(), perm.end());
  EXPECT_EQ(canonical_code(relabel(e, perm)), canonical_code(e));
  EXPECT_EQ(canonical_code(mirror(e)), canonical_code(e));
  EXPECT_NE(canonical_code(octahedron()), canonical_code(stellate_face(support::tetrahedron(), 0)));
}

TEST(CanonicalCode, SphereTriangulationCounts) {
  // Simple triangulations of the sphere on 4..10 vertices, up to isomorphism.
  const std::vector<std::size_t> expected{1, 1, 2, 5, 14, 50, 233};
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(support::planar_triangulations(n).size(), expected[n - 4]) << n;
}

}  // namespace
}  // namespace grunbaum
