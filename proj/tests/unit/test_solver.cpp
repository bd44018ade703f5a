#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "grunbaum.hpp"
#include "support/corpus.hpp"

namespace grunbaum {
namespace {

template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::PreconditionViolation;
}

/// Counts the Grünbaum colorings of `e` by trying all 3^E assignments.
std::uint64_t brute_force_count(const Embedding& e) {
  const FaceSet faces = trace_faces(e);
  const int m = e.num_edges();
  std::uint64_t total = 1, found = 0;
  for (int i = 0; i < m; ++i) total *= 3;
  std::vector<Color> c(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (int i = 0, x = static_cast<int>(code); i < m; ++i, x /= 3) c[i] = static_cast<Color>(x % 3);
    if (verify_grunbaum(e, faces, c).pass) ++found;
  }
  return found;
}

bool proper(const Graph& g, const std::vector<int>& c) {
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex w : g.neighbors(v))
      if (c[v] == c[w]) return false;
  return true;
}

// ---------------------------------------------------------------- solve_exact

TEST(SolveExact, K4CountMatchesBruteForce) {
  const Embedding e = support::tetrahedron();
  const auto r = solve_exact(e, trace_faces(e), PartialColoring(6), ExactMode::Count);
  EXPECT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.solutions, brute_force_count(e));
  EXPECT_EQ(r.solutions, 6u);  // one per assignment of colors to the three perfect matchings
}

TEST(SolveExact, OctahedronFind) {
  const Embedding e = octahedron();
  const FaceSet faces = trace_faces(e);
  const auto r = solve_exact(e, faces, PartialColoring(e.num_edges()), ExactMode::Find);
  ASSERT_EQ(r.status, SolveStatus::Found);
  EXPECT_TRUE(verify_grunbaum(e, faces, r.coloring->colors).pass);
}

TEST(SolveExact, BadFixedFaceIsUnsat) {
  const Embedding e = support::tetrahedron();
  const FaceSet faces = trace_faces(e);
  PartialColoring fixed(6);
  const auto edges = faces.edges(0);
  fixed[edges[0]] = 0;
  fixed[edges[1]] = 0;
  fixed[edges[2]] = 1;
  EXPECT_EQ(solve_exact(e, faces, fixed, ExactMode::Find).status, SolveStatus::Unsat);
  EXPECT_EQ(solve_with_exact(e, fixed).status, SolveStatus::Unsat);
}

TEST(SolveExact, FixedColorsAreKept) {
  const Embedding e = icosahedron();
  const FaceSet faces = trace_faces(e);
  PartialColoring fixed(e.num_edges());
  const auto edges = faces.edges(3);
  fixed[edges[0]] = 2;
  fixed[edges[1]] = 0;
  fixed[edges[2]] = 1;
  const auto r = solve_exact(e, faces, fixed, ExactMode::Find);
  ASSERT_EQ(r.status, SolveStatus::Found);
  for (EdgeId x : edges) EXPECT_EQ(r.coloring->colors[x], fixed[x]);
}

TEST(SolveExact, TinyBudgetIsUnknown) {
  const Embedding e = icosahedron();
  ExactOptions o;
  o.budget.nodes = 3;
  const auto r = solve_exact(e, trace_faces(e), PartialColoring(e.num_edges()), ExactMode::Count, o);
  EXPECT_EQ(r.status, SolveStatus::Unknown);
}

TEST(SolveExact, ThreadsAgreeOnCount) {
  const Embedding e = octahedron();
  ExactOptions one, four;
  four.threads = 4;
  const FaceSet faces = trace_faces(e);
  const auto a = solve_exact(e, faces, PartialColoring(e.num_edges()), ExactMode::Count, one);
  const auto b = solve_exact(e, faces, PartialColoring(e.num_edges()), ExactMode::Count, four);
  EXPECT_EQ(a.solutions, b.solutions);
  EXPECT_GT(a.solutions, 0u);
}

TEST(SolveExact, EnumerateAgreesWithCount) {
  const Embedding e = octahedron();
  const FaceSet faces = trace_faces(e);
  std::set<std::vector<Color>> seen;
  solve_exact(e, faces, PartialColoring(e.num_edges()), ExactMode::Enumerate, {}, [&](std::span<const Color> c) {
    EXPECT_TRUE(verify_grunbaum(e, faces, c).pass);
    seen.emplace(c.begin(), c.end());
    return true;
  });
  const auto count = solve_exact(e, faces, PartialColoring(e.num_edges()), ExactMode::Count);
  EXPECT_EQ(seen.size(), count.solutions);
}

// -------------------------------------------------------- vertex coloring

TEST(FourColorVertices, Examples) {
  const Graph oct = octahedron().graph();
  const auto c = four_color_vertices(oct);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(proper(oct, *c));
  EXPECT_LE(*std::max_element(c->begin(), c->end()), 3);

  const Graph k4 = complete_graph(4);
  const auto d = four_color_vertices(k4);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(std::set<int>(d->begin(), d->end()).size(), 4u);

  EXPECT_FALSE(four_color_vertices(complete_graph(5)).has_value());
}

// -------------------------------------------------------------- planar solve

TEST(SolvePlanar, TaitOnSphereTriangulations) {
  for (const Embedding& e : {octahedron(), icosahedron(),
                             stellate_face(stellate_face(stellate_face(support::tetrahedron(), 0), 1), 2)}) {
    const auto r = solve(e);
    ASSERT_EQ(r.status, SolveStatus::Found);
    EXPECT_EQ(r.method, "TAIT");
    EXPECT_TRUE(verify_grunbaum(e, *r.coloring).pass);
  }
}

TEST(SolvePlanar, AllSmallSphereTriangulations) {
  for (int n = 4; n <= 9; ++n)
    for (const Embedding& e : support::planar_triangulations(n)) {
      const auto r = solve_planar(e);
      ASSERT_EQ(r.status, SolveStatus::Found);
      EXPECT_TRUE(verify_grunbaum(e, *r.coloring).pass);
    }
}

// --------------------------------------------------------------------- disks

TEST(SquareDisks, WheelIsTypeThree) {
  // Center joined to the four corners: the spokes must alternate, so a
  // constant boundary works and an alternating one does not.
  int wheels = 0;
  for (const auto& bd : support::boundary_disks(4, 1)) {
    if (bd.disk.interior_vertex_count() != 1) continue;
    Vertex center = 0;
    while (std::count(bd.disk.boundary.begin(), bd.disk.boundary.end(), center)) ++center;
    if (bd.disk.embedding.degree(center) != 4) continue;
    ++wheels;
    const auto types = achievable_square_types(bd.disk);
    EXPECT_EQ(types, (std::set<SquareType>{SquareType::C, SquareType::B1, SquareType::B2}));
    EXPECT_EQ(square_class(types), SquareClass::Type3);
  }
  EXPECT_EQ(wheels, 1);
}

TEST(SquareDisks, DiagonalDependsOnChord) {
  int seen = 0;
  for (const auto& bd : support::boundary_disks(4, 0)) {
    const Disk& d = bd.disk;
    ++seen;
    const auto types = achievable_square_types(d);
    // The chord joins boundary 1 and 3 -> {A, B1}; boundary 0 and 2 -> {A, B2}.
    const bool chord13 = d.embedding.find_edge(d.boundary[1], d.boundary[3]).has_value();
    EXPECT_EQ(types, (std::set<SquareType>{SquareType::A, chord13 ? SquareType::B1 : SquareType::B2}));
  }
  EXPECT_GE(seen, 1);
}

TEST(SquareDisks, AbcLemmaSmall) {
  int checked = 0;
  for (const auto& bd : support::boundary_disks(4, 3)) {
    const auto types = achievable_square_types(bd.disk);
    const bool b = types.count(SquareType::B1) || types.count(SquareType::B2);
    const bool ac = types.count(SquareType::A) || types.count(SquareType::C);
    EXPECT_EQ(b, ac);
    EXPECT_NO_THROW(square_class(types));
    ++checked;
  }
  EXPECT_GE(checked, 5);
}

TEST(PentagonDisks, MovesLandOnTargets) {
  for (const auto& bd : support::boundary_disks(5, 2)) {
    const Disk& d = bd.disk;
    const FaceSet faces = trace_faces(d.embedding);
    const auto sigs = achievable_pentagon_signatures(d);
    EXPECT_FALSE(sigs.empty());
    for (const auto& s : sigs) {
      const auto colors = canonical_pentagon_colors(s.j, s.k);
      const auto r = solve_disk_exact(d, faces, boundary_fixing(d, d.boundary_edges, colors));
      ASSERT_EQ(r.status, SolveStatus::Found);
      for (PentagonMove m : {PentagonMove{s.j, s.k}, PentagonMove{s.k, s.j}}) {
        const auto moved = apply_pentagon_move(d, faces, r.coloring->colors, d.boundary_edges, m);
        const std::array<FaceId, 1> exempt{d.outer_face};
        EXPECT_TRUE(verify_partial(d.embedding, faces, moved, exempt).pass);
        const auto after = classify_pentagon(colors_along(moved, d.boundary_edges));
        const auto targets = pentagon_move_targets(m);
        const int landed = after.j == m.pinned ? after.k : after.j;
        EXPECT_TRUE(after.j == m.pinned || after.k == m.pinned);
        EXPECT_TRUE(landed == targets[0] || landed == targets[1]) << s.to_string() << " landed " << landed;
      }
    }
  }
}

TEST(PentagonMoveTargets, Examples) {
  EXPECT_EQ(pentagon_move_targets({1, 4}), (std::array<int, 2>{3, 5}));
  EXPECT_EQ(pentagon_move_targets({4, 5}), (std::array<int, 2>{1, 3}));
  EXPECT_EQ(pentagon_move_targets({1, 2}), (std::array<int, 2>{3, 5}));
}

TEST(SolveDisk, FixedSignatureAndKempeRoutes) {
  const auto disks = support::boundary_disks(4, 2);
  for (const auto& bd : disks) {
    const Disk& d = bd.disk;
    const auto types = achievable_square_types(d);
    for (SquareType t : kSquareTypes) {
      const auto colors = canonical_square_colors(t);
      const auto fixed = solve_disk(d, {std::vector<Color>(colors.begin(), colors.end()), {}});
      EXPECT_EQ(fixed.status == SolveStatus::Found, types.count(t) > 0);
      const auto free = solve_disk(d, {{}, {std::string(to_string(t))}});
      EXPECT_EQ(free.status == SolveStatus::Found, types.count(t) > 0);
      if (free.status == SolveStatus::Found) {
        EXPECT_EQ(free.signature, to_string(t));
        const std::array<FaceId, 1> exempt{d.outer_face};
        EXPECT_TRUE(verify_partial(d.embedding, trace_faces(d.embedding), free.coloring->colors, exempt).pass);
        EXPECT_EQ(classify_square(colors_along(free.coloring->colors, d.boundary_edges)).type, t);
      }
    }
  }
}

TEST(SolveDisk, FixedLengthMismatch) {
  const auto bd = support::boundary_disks(4, 1).front();
  EXPECT_EQ(error_of([&] { solve_disk(bd.disk, {{0, 1, 0}, {}}); }), ErrorCode::PreconditionViolation);
}

// ------------------------------------------------------------- extension

TEST(ExtendIntoFaces, RestrictionEqualsHost) {
  const Embedding host = gen_named("K7");
  const auto hc = solve(host);
  ASSERT_EQ(hc.status, SolveStatus::Found);
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Embedding g = random_refinement(host, 6, seed);
    const auto ext = extend_into_faces(host, PartialColoring(hc.coloring->colors), g);
    EXPECT_TRUE(verify_grunbaum(g, ext).pass);
    for (auto [u, v] : host.edges()) EXPECT_EQ(ext[g.edge(u, v)], (*hc.coloring)[host.edge(u, v)]);
  }
}

TEST(ExtendIntoFaces, StellatedFaceCopiesOppositeColors) {
  // The apex edge to corner c must avoid both face edges at c, so it takes the
  // color of the opposite face edge.
  const Embedding host = octahedron();
  const auto hc = solve(host);
  ASSERT_EQ(hc.status, SolveStatus::Found);
  const FaceSet faces = trace_faces(host);
  const Embedding g = stellate_face(host, 0);
  const auto ext = extend_into_faces(host, PartialColoring(hc.coloring->colors), g);
  const auto vs = faces.vertices(host, 0);
  const Vertex apex = host.num_vertices();
  for (int i = 0; i < 3; ++i) {
    const EdgeId opposite = host.edge(vs[(i + 1) % 3], vs[(i + 2) % 3]);
    EXPECT_EQ(ext[g.edge(apex, vs[i])], (*hc.coloring)[opposite]);
  }
}

TEST(ExtendIntoFaces, Identity) {
  const Embedding host = icosahedron();
  const auto hc = solve(host);
  const auto ext = extend_into_faces(host, PartialColoring(hc.coloring->colors), host);
  EXPECT_EQ(ext.colors, hc.coloring->colors);
}

TEST(ExtendIntoFaces, Errors) {
  const Embedding host = octahedron();
  const auto hc = solve(host);
  EXPECT_EQ(error_of([&] { extend_into_faces(host, PartialColoring(host.num_edges()), host); }),
            ErrorCode::ColoringIncomplete);
  EXPECT_EQ(error_of([&] { extend_into_faces(host, PartialColoring(hc.coloring->colors), support::tetrahedron()); }),
            ErrorCode::NotARefinement);
}

// ------------------------------------------------------------------- torus

TEST(SolveTorus, AltshulerGrid) {
  const auto r = solve(gen_altshuler(4, 4, 1).embedding);
  ASSERT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.method, "ALTSHULER");
}

TEST(SolveTorus, StellatedK7) {
  std::mt19937_64 rng(3);
  Embedding e = gen_named("K7");
  const int faces = trace_faces(e).size();
  for (FaceId f = faces - 1; f >= 0; --f) {
    const int times = static_cast<int>(rng() % 3);
    for (int i = 0; i < times; ++i) e = stellate_face(e, f);
  }
  const auto r = solve(e);
  ASSERT_EQ(r.status, SolveStatus::Found);
  EXPECT_EQ(r.method, "K7");
  EXPECT_TRUE(verify_grunbaum(e, *r.coloring).pass);
}

TEST(SolveTorus, OneInstancePerMethod) {
  std::map<std::string, const support::TorusInstance*> first;
  for (const auto& inst : support::torus_corpus()) first.emplace(inst.expected_method, &inst);
  EXPECT_GE(first.size(), 10u);
  for (const auto& [method, inst] : first) {
    const auto r = solve(inst->embedding);
    ASSERT_EQ(r.status, SolveStatus::Found) << inst->name;
    EXPECT_EQ(r.method, method) << inst->name;
    EXPECT_TRUE(verify_grunbaum(inst->embedding, *r.coloring).pass) << inst->name;
    EXPECT_FALSE(r.trace.empty());
  }
}

TEST(SolveTorus, BudgetExhaustionIsUnknown) {
  SolveOptions o;
  o.budget.nodes = 1;
  const auto r = solve(random_refinement(gen_named("K7"), 4, 2), o);
  EXPECT_EQ(r.status, SolveStatus::Unknown);
  EXPECT_FALSE(r.coloring.has_value());
}

TEST(SolveTorus, Preconditions) {
  EXPECT_EQ(error_of([] { solve_torus(octahedron()); }), ErrorCode::PreconditionViolation);
  EXPECT_EQ(error_of([] { solve_torus(gen_k6(K6Variant::H6).embedding); }), ErrorCode::NotTriangulation);
}

TEST(SolveWithExact, TorusInstances) {
  for (std::size_t i = 0; i < support::torus_corpus().size(); i += 37) {
    const auto& inst = support::torus_corpus()[i];
    const auto r = solve_with_exact(inst.embedding, PartialColoring(inst.embedding.num_edges()));
    ASSERT_EQ(r.status, SolveStatus::Found) << inst.name;
    EXPECT_EQ(r.method, "EXACT");
  }
}

// -------------------------------------------------------------- case tables

TEST(CaseTables, Examples444) {
  using C = SquareClass;
  EXPECT_EQ(resolve_444b({C::Type1, C::Type1, C::Type3}).figure, "fig4-iii");
  EXPECT_EQ(resolve_444b({C::Type1, C::Type1, C::Type1}).figure, "fig4-v");
  EXPECT_EQ(resolve_444a({C::Type2, C::Type2, C::Type3}), (CaseEntry{"fig5-2", 0, {}}));
  EXPECT_EQ(resolve_444a({C::Type2, C::Type3, C::Type2}), (CaseEntry{"fig5-2", 2, {}}));
  EXPECT_EQ(resolve_444a({C::Type3, C::Type3, C::Type3}).figure, "fig5-4");
}

TEST(CaseTables, Every444EntryRealizesItsClasses) {
  for (const char* variant : {"444A", "444B"})
    for (SquareClass a : kSquareClasses)
      for (SquareClass b : kSquareClasses)
        for (SquareClass c : kSquareClasses) {
          ObservedSignatures seen;
          seen.squares = {a, b, c};
          const auto res = apply_case_table(variant, seen);
          const auto ce = critical_embedding(variant);
          EXPECT_TRUE(verify_partial(ce.embedding, res.coloring).pass);
          for (int i = 0; i < 3; ++i) {
            const auto t = classify_square(colors_along(res.coloring.colors, ce.face_edges(i))).type;
            const auto members = square_class_members(seen.squares[i]);
            EXPECT_NE(std::find(members.begin(), members.end(), t), members.end())
                << variant << " " << triple_string({a, b, c}) << " square " << i;
          }
        }
}

TEST(CaseTables, FiveFourReductions) {
  // 1;4 under a type-1 square: keep 4, move 1; the reducer lands on 4;5.
  std::vector<PentagonMove> moves;
  const auto entry = resolve_54(SquareClass::Type1, make_pentagon_pair(1, 4), [&](PentagonMove m) {
    moves.push_back(m);
    return make_pentagon_pair(4, 5);
  });
  EXPECT_EQ(entry.figure, "fig6-6");
  ASSERT_EQ(moves.size(), 1u);
  EXPECT_EQ(moves[0].pinned, 4);
  EXPECT_EQ(moves[0].moving, 1);
  EXPECT_EQ(entry.reductions, std::vector<std::string>{"1;4->4;5"});
  EXPECT_EQ(error_of([] { resolve_54(SquareClass::Type3, make_pentagon_pair(1, 3), {}); }), ErrorCode::NoTableEntry);
  EXPECT_EQ(resolve_54(SquareClass::Type3, make_pentagon_pair(2, 5), {}).figure, "fig6-1");
}

TEST(CaseTables, FiveFourRulesCloseUnderMoves) {
  // Every reduction target is again in the table and, following the targets,
  // every signature reaches a base case whatever the reducer picks.
  for (SquareClass sq : {SquareClass::Type1, SquareClass::Type3}) {
    for (const auto& start : all_pentagon_signatures()) {
      std::vector<std::pair<int, int>> stack{{start.j, start.k}};
      std::set<std::pair<int, int>> visiting;
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        const auto& rule = pentagon_rule(sq, a, b);
        if (rule.pinned == 0) continue;
        ASSERT_LT(visiting.size(), 64u);
        visiting.insert({a, b});
        const PentagonMove m{rule.pinned, rule.pinned == rule.a ? rule.b : rule.a};
        for (int t : pentagon_move_targets(m)) {
          const auto next = make_pentagon_pair(m.pinned, t);
          if (!visiting.count({next.j, next.k})) stack.push_back({next.j, next.k});
        }
      }
    }
  }
}

TEST(CaseTables, HexagonEntries) {
  constexpr Color t = 0, p = 1, g = 2;
  ObservedSignatures seen;
  seen.hexagon = std::array<Color, 6>{t, t, p, p, p, p};
  const auto res = apply_case_table("6", seen);
  EXPECT_EQ(res.entry.figure, "fig7-i");
  const auto six = critical_embedding("6");
  EXPECT_EQ(colors_along(res.coloring.colors, six.face_edges(0)), (std::vector<Color>{t, t, p, p, p, p}));
  EXPECT_TRUE(verify_partial(six.embedding, res.coloring).pass);

  seen.hexagon = std::array<Color, 6>{t, p, g, t, g, p};
  EXPECT_EQ(error_of([&] { apply_case_table("6", seen); }), ErrorCode::NoTableEntry);
  const auto reduced = apply_case_table("6", seen, {}, [&](HexagonMove) { return std::array<Color, 6>{t, p, g, t, p, g}; });
  EXPECT_EQ(reduced.entry.figure, "fig7-iv");
  EXPECT_EQ(reduced.entry.reductions, std::vector<std::string>{"tpgtgp->tpgtpg"});
}

TEST(CaseTables, QuadAndUnknownVariant) {
  ObservedSignatures seen;
  seen.quad = SquareType::B2;
  EXPECT_EQ(apply_case_table("H7K2", seen).entry.figure, "fig2-H7K2-3");
  seen.quad = SquareType::A;
  EXPECT_EQ(error_of([&] { apply_case_table("C3C5", seen); }), ErrorCode::NoTableEntry);
  EXPECT_EQ(error_of([&] { apply_case_table("K9", seen); }), ErrorCode::UnknownId);
  EXPECT_EQ(error_of([&] { apply_case_table("444A", seen); }), ErrorCode::PreconditionViolation);
}

}  // namespace
}  // namespace grunbaum
