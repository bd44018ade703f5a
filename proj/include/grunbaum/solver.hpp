#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "grunbaum/budget.hpp"
#include "grunbaum/case_tables.hpp"
#include "grunbaum/catalog.hpp"
#include "grunbaum/chroma.hpp"
#include "grunbaum/coloring.hpp"
#include "grunbaum/disk.hpp"
#include "grunbaum/exact.hpp"
#include "grunbaum/figures.hpp"
#include "grunbaum/kempe.hpp"
#include "grunbaum/signature.hpp"
#include "grunbaum/subgraph.hpp"

namespace grunbaum {

/// Outcome of a solve. FOUND always carries a coloring that passed
/// verify_grunbaum; UNSAT only comes from an exhausted exact search.
struct SolveReport {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<EdgeColoring> coloring;
  std::string method;               // TAIT, ALTSHULER, K7, CRITICAL(...), EXACT
  std::vector<std::string> trace;   // human-readable steps
  std::uint64_t nodes = 0;
  double millis = 0;
};

struct SolveOptions {
  Budget budget = Budget::from_environment();
  int threads = 1;
};

namespace detail {

/// Throws unless the coloring is a Grünbaum coloring of e.
inline void assert_grunbaum(const Embedding& e, const EdgeColoring& c, const std::string& method) {
  const auto report = verify_grunbaum(e, c);
  if (!report.pass)
    throw std::logic_error(method + " produced a coloring with " + std::to_string(report.violations.size()) +
                           " violating faces");
}

/// Bijection of colors sending from[i] to to[i] for every i, if one exists.
inline std::optional<std::array<Color, 3>> color_map(std::span<const Color> from, std::span<const Color> to) {
  std::array<Color, 3> perm{kNoColor, kNoColor, kNoColor};
  std::array<bool, 3> used{};
  for (std::size_t i = 0; i < from.size(); ++i) {
    const Color a = from[i], b = to[i];
    if (a == kNoColor || b == kNoColor) return std::nullopt;
    if (perm[a] == kNoColor) {
      if (used[b]) return std::nullopt;
      perm[a] = b;
      used[b] = true;
    } else if (perm[a] != b) {
      return std::nullopt;
    }
  }
  return complete_letters(perm);
}

}  // namespace detail

// ------------------------------------------------------------------ planar

/// χ ≤ 4 route: a proper vertex 4-coloring lifted through the Klein group.
/// Works on any triangulation whose graph is 4-colorable (planar ones always are).
inline SolveReport solve_tait(const Embedding& e, const SolveOptions& options = {}) {
  SolveReport report;
  report.method = "TAIT";
  BudgetMeter meter(options.budget);
  try {
    auto vc = k_coloring(e.graph(), 4, meter);
    report.nodes = meter.nodes();
    report.millis = meter.millis();
    if (!vc) {
      report.trace.push_back("graph is not 4-colorable");
      return report;
    }
    report.coloring = tait_lift(e, *vc);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded) throw;
    report.nodes = meter.nodes();
    report.millis = meter.millis();
    report.trace.push_back("vertex 4-coloring budget exhausted");
    return report;
  }
  detail::assert_grunbaum(e, *report.coloring, report.method);
  report.status = SolveStatus::Found;
  report.trace.push_back("vertex 4-coloring lifted to edges");
  return report;
}

inline SolveReport solve_planar(const Embedding& e, const SolveOptions& options = {}) {
  const FaceSet faces = trace_faces(e);
  if (genus(e, faces) != 0) fail(ErrorCode::PreconditionViolation, "solve_planar needs a planar embedding");
  if (!is_triangulation(faces)) fail(ErrorCode::NotTriangulation, "solve_planar needs a triangulation");
  return solve_tait(e, options);
}

// ------------------------------------------------------------------- disks

/// Exact solve of a disk's interior with the given fixed edges; the outer
/// face is exempt and the search starts from it.
inline ExactResult solve_disk_exact(const Disk& disk, const FaceSet& faces, const PartialColoring& fixed,
                                    const SolveOptions& options = {}, ExactMode mode = ExactMode::Find,
                                    const SolutionSink& sink = {}) {
  ExactOptions o;
  o.budget = options.budget;
  o.exempt_faces = {disk.outer_face};
  o.start_face = disk.outer_face;
  o.threads = options.threads;
  return solve_exact(disk.embedding, faces, fixed, mode, o, sink);
}

/// Fixed coloring placing `colors[i]` on disk edge `edges[i]`.
inline PartialColoring boundary_fixing(const Disk& disk, std::span<const EdgeId> edges, std::span<const Color> colors) {
  PartialColoring fixed(disk.embedding.num_edges());
  for (std::size_t i = 0; i < edges.size(); ++i) fixed[edges[i]] = colors[i];
  return fixed;
}

/// Signature name of boundary colors: square type, pentagon pair, hexagon
/// class, or the raw color string for other lengths.
inline std::string boundary_signature(std::span<const Color> colors) {
  switch (colors.size()) {
    case 4: return std::string(to_string(classify_square(colors).type));
    case 5: return classify_pentagon(colors).to_string();
    case 6: return std::string(to_string(classify_hexagon(colors).cls));
    default: return color_string(colors);
  }
}

/// Boundary colorings realizing a signature name (all placements for hexagons).
inline std::vector<std::vector<Color>> signature_representatives(const std::string& sig, int length) {
  std::vector<std::vector<Color>> out;
  if (length == 4) {
    for (SquareType t : kSquareTypes)
      if (to_string(t) == sig) {
        auto c = canonical_square_colors(t);
        out.emplace_back(c.begin(), c.end());
      }
  } else if (length == 5) {
    for (const auto& s : all_pentagon_signatures())
      if (s.to_string() == sig) {
        auto c = canonical_pentagon_colors(s.j, s.k);
        out.emplace_back(c.begin(), c.end());
      }
  } else if (length == 6) {
    for (HexagonClass cls : kHexagonClasses)
      if (to_string(cls) == sig)
        for (int refl = 0; refl < 2; ++refl)
          for (int rot = 0; rot < 6; ++rot) {
            auto c = place_hexagon(cls, {rot, refl == 1});
            std::vector<Color> v(c.begin(), c.end());
            if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(std::move(v));
          }
  }
  if (out.empty()) fail(ErrorCode::UnknownId, "unknown boundary signature '" + sig + "' for length " + std::to_string(length));
  return out;
}

/// Constraint on the outer boundary of a disk: fixed colors (one per
/// boundary edge, kNoColor for free), and/or a set of allowed signatures.
struct BoundaryConstraint {
  std::vector<Color> fixed;
  std::vector<std::string> signatures;
};

struct DiskReport {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<PartialColoring> coloring;  // on the disk's edges
  std::string signature;
  std::string route;  // "exact", "kempe" or "fixed"
  std::uint64_t nodes = 0;
};

/// Pentagon or square moves: every single Kempe change seeded at a boundary edge.
inline std::vector<std::vector<Color>> boundary_kempe_neighbors(const Disk& disk, const FaceSet& faces,
                                                                std::span<const Color> colors) {
  std::vector<std::vector<Color>> out;
  const std::array<FaceId, 1> exempt{disk.outer_face};
  for (EdgeId x : disk.boundary_edges)
    for (Color other = 0; other < kNumColors; ++other)
      if (other != colors[x]) out.push_back(kempe_change(disk.embedding, faces, colors, x, colors[x], other, exempt));
  return out;
}

/// Interior coloring of a disk meeting a boundary constraint. Tries a free
/// exact solve, then single Kempe changes from it, then an exact solve per
/// allowed signature. UNSAT means no boundary coloring in the set is
/// achievable.
inline DiskReport solve_disk(const Disk& disk, const BoundaryConstraint& bc, const SolveOptions& options = {}) {
  const FaceSet faces = trace_faces(disk.embedding);
  const int k = disk.boundary_length();
  DiskReport report;
  auto boundary_of = [&](std::span<const Color> colors) { return colors_along(colors, disk.boundary_edges); };
  auto allowed = [&](std::span<const Color> colors) {
    if (bc.signatures.empty()) return true;
    try {
      const auto sig = boundary_signature(boundary_of(colors));
      return std::find(bc.signatures.begin(), bc.signatures.end(), sig) != bc.signatures.end();
    } catch (const Error&) {
      return false;
    }
  };
  auto finish = [&](std::vector<Color> colors, std::string route) {
    report.status = SolveStatus::Found;
    try {
      report.signature = boundary_signature(boundary_of(colors));
    } catch (const Error&) {
      report.signature = color_string(boundary_of(colors));
    }
    report.coloring = PartialColoring(std::move(colors));
    report.route = std::move(route);
    return report;
  };

  PartialColoring fixed(disk.embedding.num_edges());
  if (!bc.fixed.empty()) {
    if (static_cast<int>(bc.fixed.size()) != k) fail(ErrorCode::PreconditionViolation, "fixed boundary length mismatch");
    fixed = boundary_fixing(disk, disk.boundary_edges, bc.fixed);
  }
  const ExactResult first = solve_disk_exact(disk, faces, fixed, options);
  report.nodes += first.nodes;
  if (first.status != SolveStatus::Found) {
    report.status = first.status;
    return report;
  }
  if (allowed(first.coloring->colors)) return finish(first.coloring->colors, bc.fixed.empty() ? "exact" : "fixed");
  if (bc.fixed.empty()) {
    for (auto& next : boundary_kempe_neighbors(disk, faces, first.coloring->colors))
      if (allowed(next)) return finish(std::move(next), "kempe");
  }
  bool unknown = false;
  for (const auto& sig : bc.signatures)
    for (const auto& rep : signature_representatives(sig, k)) {
      std::vector<Color> want = rep;
      bool clash = false;
      for (int i = 0; i < k; ++i)
        if (!bc.fixed.empty() && bc.fixed[i] != kNoColor && bc.fixed[i] != want[i]) clash = true;
      if (clash) continue;
      const ExactResult r = solve_disk_exact(disk, faces, boundary_fixing(disk, disk.boundary_edges, want), options);
      report.nodes += r.nodes;
      if (r.status == SolveStatus::Found) return finish(r.coloring->colors, "exact");
      if (r.status == SolveStatus::Unknown) unknown = true;
    }
  report.status = unknown ? SolveStatus::Unknown : SolveStatus::Unsat;
  return report;
}

/// Square types realizable by the disk's interior with the boundary read
/// along `labeled` (four disk edges; defaults to the boundary order).
inline std::set<SquareType> achievable_square_types(const Disk& disk, const FaceSet& faces,
                                                    std::span<const EdgeId> labeled, const SolveOptions& options = {}) {
  if (labeled.size() != 4) fail(ErrorCode::PreconditionViolation, "square types need four boundary edges");
  std::set<SquareType> out;
  for (SquareType t : kSquareTypes) {
    const auto colors = canonical_square_colors(t);
    const ExactResult r = solve_disk_exact(disk, faces, boundary_fixing(disk, labeled, colors), options);
    if (r.status == SolveStatus::Unknown) fail(ErrorCode::BudgetExceeded, "square type search budget exhausted");
    if (r.status == SolveStatus::Found) out.insert(t);
  }
  return out;
}

inline std::set<SquareType> achievable_square_types(const Disk& disk, const SolveOptions& options = {}) {
  return achievable_square_types(disk, trace_faces(disk.embedding), disk.boundary_edges, options);
}

/// Pentagon signatures realizable by the disk's interior (boundary order).
inline std::vector<PentagonSignature> achievable_pentagon_signatures(const Disk& disk,
                                                                     const SolveOptions& options = {}) {
  if (disk.boundary_length() != 5) fail(ErrorCode::PreconditionViolation, "pentagon signatures need a pentagon disk");
  const FaceSet faces = trace_faces(disk.embedding);
  std::vector<PentagonSignature> out;
  for (const auto& s : all_pentagon_signatures()) {
    const auto colors = canonical_pentagon_colors(s.j, s.k);
    const ExactResult r = solve_disk_exact(disk, faces, boundary_fixing(disk, disk.boundary_edges, colors), options);
    if (r.status == SolveStatus::Unknown) fail(ErrorCode::BudgetExceeded, "pentagon signature search budget exhausted");
    if (r.status == SolveStatus::Found) out.push_back(s);
  }
  return out;
}

/// One pentagon reduction on a concrete disk coloring: the (t, c) chain at
/// labeled edge `moving` (c its color), with t the tripled color. Returns
/// the new coloring.
inline std::vector<Color> apply_pentagon_move(const Disk& disk, const FaceSet& faces, std::span<const Color> colors,
                                              std::span<const EdgeId> labeled, PentagonMove move) {
  const auto sig = classify_pentagon(colors_along(colors, labeled));
  const EdgeId seed = labeled[move.moving - 1];
  const std::array<FaceId, 1> exempt{disk.outer_face};
  return kempe_change(disk.embedding, faces, colors, seed, sig.letters[0], colors[seed], exempt);
}

/// One hexagon reduction on a concrete disk coloring.
inline std::vector<Color> apply_hexagon_move(const Disk& disk, const FaceSet& faces, std::span<const Color> colors,
                                             std::span<const EdgeId> labeled, HexagonMove move) {
  const std::array<FaceId, 1> exempt{disk.outer_face};
  return kempe_change(disk.embedding, faces, colors, labeled[move.edge], move.a, move.b, exempt);
}

// -------------------------------------------------------- region filling

/// The part of a host triangulation lying inside one face of an embedded
/// subgraph, cut out as a disk.
struct Region {
  FaceId face = -1;  // face of the sub-embedding
  Disk disk;
  FaceSet faces;     // faces of disk.embedding

  /// Disk edge carrying the given host edge (boundary or interior).
  EdgeId disk_edge(EdgeId host_edge) const {
    for (EdgeId x = 0; x < disk.embedding.num_edges(); ++x)
      if (disk.host_edge[x] == host_edge) return x;
    fail(ErrorCode::NotARefinement, "host edge " + std::to_string(host_edge) + " is not in the region");
  }
  std::vector<EdgeId> disk_edges(std::span<const EdgeId> host_edges) const {
    std::vector<EdgeId> out;
    for (EdgeId h : host_edges) out.push_back(disk_edge(h));
    return out;
  }
};

/// Region of host `g` inside face `f` of `sub` (a sub-embedding of g). The
/// face of dart u->v in sub lies on the same side of u->v as g's face of
/// that dart, so the cycle is read straight off the face.
inline Region region_of(const Embedding& g, const FaceSet& gfaces, const SubEmbedding& sub, const FaceSet& sfaces,
                        FaceId f) {
  FaceCycle cycle;
  for (DartId d : sfaces.faces[f]) cycle.vertices.push_back(sub.host_vertex[sub.embedding.tail(d)]);
  Region r;
  r.face = f;
  try {
    r.disk = extract_disk(g, gfaces, cycle, Side::Interior);
  } catch (const Error& err) {
    fail(ErrorCode::NotARefinement, "face " + std::to_string(f) + " of the subgraph does not bound a disk: " + err.what());
  }
  r.faces = trace_faces(r.disk.embedding);
  return r;
}

/// Sub-embedding face whose boundary consists of exactly these host edges.
inline FaceId face_with_edges(const SubEmbedding& sub, const FaceSet& sfaces, std::vector<EdgeId> host_edges) {
  std::sort(host_edges.begin(), host_edges.end());
  for (FaceId f = 0; f < sfaces.size(); ++f) {
    std::vector<EdgeId> es;
    for (EdgeId x : sfaces.edges(f)) es.push_back(sub.host_edge[x]);
    std::sort(es.begin(), es.end());
    if (es == host_edges) return f;
  }
  fail(ErrorCode::NotARefinement, "labeled face not found in the subgraph embedding");
}

/// Copies a disk coloring into host colors, after permuting it to agree with
/// the host colors already present on the boundary. Returns false when no
/// permutation matches.
inline bool transplant(const Region& r, std::span<const Color> disk_colors, std::vector<Color>& host) {
  std::vector<Color> from, to;
  for (EdgeId x : r.disk.boundary_edges) {
    from.push_back(disk_colors[x]);
    to.push_back(host[r.disk.host_edge[x]]);
  }
  auto perm = detail::color_map(from, to);
  if (!perm) return false;
  for (EdgeId x = 0; x < r.disk.embedding.num_edges(); ++x) host[r.disk.host_edge[x]] = (*perm)[disk_colors[x]];
  return true;
}

struct FillStats {
  std::uint64_t nodes = 0;
};

/// Colors the interior of a region whose boundary is already colored in
/// `host`. Triangular regions are planar triangulations in their own right
/// and take the Tait route plus a color permutation; larger boundaries are
/// solved exactly with the boundary fixed.
inline bool fill_region(const Region& r, std::vector<Color>& host, const SolveOptions& options, FillStats& stats) {
  if (r.disk.boundary_length() == 3 && r.disk.interior_vertex_count() > 0) {
    const SolveReport inner = solve_tait(r.disk.embedding, options);
    stats.nodes += inner.nodes;
    if (inner.status == SolveStatus::Found && transplant(r, inner.coloring->colors, host)) return true;
  }
  PartialColoring fixed(r.disk.embedding.num_edges());
  for (EdgeId x : r.disk.boundary_edges) fixed[x] = host[r.disk.host_edge[x]];
  const ExactResult res = solve_disk_exact(r.disk, r.faces, fixed, options);
  stats.nodes += res.nodes;
  if (res.status != SolveStatus::Found) return false;
  return transplant(r, res.coloring->colors, host);
}

/// Colors all of `g` from a coloring of the edges of `sub`: every face of
/// the sub-embedding is filled independently, except faces listed in
/// `prepared`, whose disk colorings are transplanted as given.
inline std::optional<std::vector<Color>> fill_from_subgraph(const Embedding& g, const FaceSet& gfaces,
                                                            const SubEmbedding& sub, std::span<const Color> sub_colors,
                                                            const SolveOptions& options, FillStats& stats,
                                                            const std::map<FaceId, std::pair<Region, std::vector<Color>>>& prepared = {}) {
  std::vector<Color> host(g.num_edges(), kNoColor);
  for (EdgeId x = 0; x < sub.embedding.num_edges(); ++x) host[sub.host_edge[x]] = sub_colors[x];
  const FaceSet sfaces = trace_faces(sub.embedding);
  for (FaceId f = 0; f < sfaces.size(); ++f) {
    if (auto it = prepared.find(f); it != prepared.end()) {
      if (transplant(it->second.first, it->second.second, host)) continue;
      if (!fill_region(it->second.first, host, options, stats)) return std::nullopt;
      continue;
    }
    const Region r = region_of(g, gfaces, sub, sfaces, f);
    if (!fill_region(r, host, options, stats)) return std::nullopt;
  }
  if (std::any_of(host.begin(), host.end(), [](Color c) { return c == kNoColor; }))
    fail(ErrorCode::NotARefinement, "some edges lie in no face of the subgraph");
  return host;
}

/// Extends a coloring of `host` to its refinement `g`. Host vertex i must be
/// vertex i of g (as produced by stellation), host edges must be edges of g,
/// and g's rotations restricted to host edges must reproduce host.
inline EdgeColoring extend_into_faces(const Embedding& host, const PartialColoring& host_coloring, const Embedding& g,
                                      const SolveOptions& options = {}) {
  if (host_coloring.size() != host.num_edges() || !host_coloring.complete())
    fail(ErrorCode::ColoringIncomplete, "host coloring must cover every host edge");
  if (host.num_vertices() > g.num_vertices()) fail(ErrorCode::NotARefinement, "host has more vertices than g");
  std::vector<Vertex> vertices(host.num_vertices());
  for (Vertex v = 0; v < host.num_vertices(); ++v) vertices[v] = v;
  std::vector<EdgeId> edges;
  for (auto [u, v] : host.edges()) {
    auto id = g.find_edge(u, v);
    if (!id) fail(ErrorCode::NotARefinement, "host edge " + std::to_string(u) + "-" + std::to_string(v) + " missing in g");
    edges.push_back(*id);
  }
  const SubEmbedding sub = restrict_embedding(g, vertices, edges);
  if (!(sub.embedding == host)) fail(ErrorCode::NotARefinement, "g does not restrict to the host embedding");
  const FaceSet hfaces = trace_faces(host);
  if (!verify_partial(host, hfaces, host_coloring.colors).pass)
    fail(ErrorCode::PreconditionViolation, "host coloring is not a partial Grünbaum coloring");
  FillStats stats;
  const FaceSet gfaces = trace_faces(g);
  auto colors = fill_from_subgraph(g, gfaces, sub, host_coloring.colors, options, stats);
  if (!colors) fail(ErrorCode::BudgetExceeded, "a face region could not be colored within budget");
  EdgeColoring out(std::move(*colors));
  detail::assert_grunbaum(g, out, "extend_into_faces");
  return out;
}

// ------------------------------------------------------------------- torus

namespace detail {

struct TorusContext {
  const Embedding& g;
  FaceSet gfaces;
  SolveOptions options;
  SolveReport report;
  FillStats stats;
};

inline SubEmbedding restrict_to_match(const Embedding& g, const Graph& pattern, const std::vector<Vertex>& map) {
  std::vector<EdgeId> edges;
  for (auto [u, v] : pattern.edges()) edges.push_back(g.edge(map[u], map[v]));
  return restrict_embedding(g, map, edges);
}

/// Colors g from a complete coloring of `sub`; sets FOUND on success.
inline void finish_from_subgraph(TorusContext& ctx, const SubEmbedding& sub, std::span<const Color> sub_colors,
                                 const std::map<FaceId, std::pair<Region, std::vector<Color>>>& prepared = {}) {
  auto colors = fill_from_subgraph(ctx.g, ctx.gfaces, sub, sub_colors, ctx.options, ctx.stats, prepared);
  if (!colors) {
    ctx.report.trace.push_back("a face region could not be colored within budget");
    return;
  }
  ctx.report.coloring = EdgeColoring(std::move(*colors));
  ctx.report.status = SolveStatus::Found;
}

inline void solve_via_grid_roles(TorusContext& ctx, const SubEmbedding& sub) {
  auto roles = recognize_altshuler(sub.embedding);
  if (!roles) fail(ErrorCode::NotAGridLabeling, "6-regular subgraph is not recognized as a grid");
  ctx.report.trace.push_back("grid roles found on the 6-regular subgraph");
  finish_from_subgraph(ctx, sub, altshuler_coloring(sub.embedding, *roles).colors);
}

/// Critical subgraph with a catalog embedding: maps catalog labels onto the
/// host and returns the map plus, per labeled face, its region and the
/// labeled host edges.
struct CatalogPlacement {
  CriticalEmbedding catalog;
  SubEmbedding sub;
  FaceSet sfaces;
  MapIsomorphism iso;  // catalog -> sub
  std::vector<Region> regions;                        // one per labeled face
  std::vector<std::vector<EdgeId>> labeled;           // disk edges per labeled face, labeled order

  std::vector<Color> sub_colors(const PartialColoring& catalog_coloring) const {
    std::vector<Color> out(sub.embedding.num_edges(), kNoColor);
    for (EdgeId x = 0; x < catalog.embedding.num_edges(); ++x) out[iso.edge(x)] = catalog_coloring[x];
    return out;
  }
};

inline CatalogPlacement place_catalog(TorusContext& ctx, CriticalEmbedding catalog, SubEmbedding sub,
                                      MapIsomorphism iso) {
  CatalogPlacement p{std::move(catalog), std::move(sub), {}, std::move(iso), {}, {}};
  p.sfaces = trace_faces(p.sub.embedding);
  for (std::size_t i = 0; i < p.catalog.labeled_faces.size(); ++i) {
    std::vector<EdgeId> host_edges;
    for (EdgeId x : p.catalog.face_edges(static_cast<int>(i))) host_edges.push_back(p.sub.host_edge[p.iso.edge(x)]);
    const FaceId f = face_with_edges(p.sub, p.sfaces, host_edges);
    Region r = region_of(ctx.g, ctx.gfaces, p.sub, p.sfaces, f);
    p.labeled.push_back(r.disk_edges(host_edges));
    p.regions.push_back(std::move(r));
  }
  return p;
}

inline std::optional<CatalogPlacement> match_catalog(TorusContext& ctx, const std::string& id, const Graph& pattern,
                                                     const std::vector<Vertex>& map) {
  SubEmbedding sub = restrict_to_match(ctx.g, pattern, map);
  CriticalEmbedding catalog = critical_embedding(id);
  auto iso = find_map_isomorphism(catalog.embedding, sub.embedding, true);
  if (!iso) return std::nullopt;
  return place_catalog(ctx, std::move(catalog), std::move(sub), std::move(*iso));
}

inline SquareClass region_square_class(TorusContext& ctx, const CatalogPlacement& p, int face) {
  const auto& r = p.regions[face];
  const auto types = achievable_square_types(r.disk, r.faces, p.labeled[face], ctx.options);
  std::string s;
  for (SquareType t : types) s += std::string(s.empty() ? "" : ",") + std::string(to_string(t));
  const SquareClass c = square_class(types);
  ctx.report.trace.push_back("square " + std::to_string(face + 1) + " realizes {" + s + "}: type " +
                             std::to_string(to_int(c)));
  return c;
}

inline std::vector<Color> free_region_coloring(TorusContext& ctx, const Region& r) {
  const ExactResult res = solve_disk_exact(r.disk, r.faces, PartialColoring(r.disk.embedding.num_edges()), ctx.options);
  ctx.stats.nodes += res.nodes;
  if (res.status != SolveStatus::Found) fail(ErrorCode::BudgetExceeded, "could not color a face region");
  return res.coloring->colors;
}

inline void solve_k6(TorusContext& ctx, const SubgraphMatch& m) {
  const Graph pattern = complete_graph(6);
  std::optional<CatalogPlacement> placed;
  for (K6Variant v : kK6Variants)
    if ((placed = match_catalog(ctx, std::string(to_string(v)), pattern, m.map))) break;
  if (!placed) fail(ErrorCode::ClassificationAnomaly, "K6 subgraph embedding matches no catalog embedding");
  CatalogPlacement& p = *placed;
  const std::string variant = p.catalog.id;
  ctx.report.method = "CRITICAL(K6-" + variant + ")";
  ctx.report.trace.push_back("K6 embedding " + variant);

  ObservedSignatures seen;
  std::map<FaceId, std::pair<Region, std::vector<Color>>> prepared;
  PentagonReducer pentagon_reducer;
  HexagonReducer hexagon_reducer;
  std::vector<Color> work;  // concrete coloring of the pentagon or hexagon region

  if (variant == "444A" || variant == "444B") {
    for (int i = 0; i < 3; ++i) seen.squares.push_back(region_square_class(ctx, p, i));
  } else if (variant == "54") {
    seen.squares.push_back(region_square_class(ctx, p, 1));
    const Region& pent = p.regions[0];
    work = free_region_coloring(ctx, pent);
    seen.pentagon = classify_pentagon(colors_along(work, p.labeled[0]));
    ctx.report.trace.push_back("pentagon " + seen.pentagon->to_string());
    pentagon_reducer = [&](PentagonMove mv) {
      work = apply_pentagon_move(pent.disk, pent.faces, work, p.labeled[0], mv);
      return classify_pentagon(colors_along(work, p.labeled[0]));
    };
  } else {
    const Region& hex = p.regions[0];
    work = free_region_coloring(ctx, hex);
    std::array<Color, 6> h{};
    const auto along = colors_along(work, p.labeled[0]);
    std::copy(along.begin(), along.end(), h.begin());
    seen.hexagon = h;
    ctx.report.trace.push_back("hexagon " + std::string(to_string(classify_hexagon(h).cls)));
    hexagon_reducer = [&](HexagonMove mv) {
      work = apply_hexagon_move(hex.disk, hex.faces, work, p.labeled[0], mv);
      std::array<Color, 6> out{};
      const auto c = colors_along(work, p.labeled[0]);
      std::copy(c.begin(), c.end(), out.begin());
      return out;
    };
  }

  const TableResolution res = apply_case_table(variant, seen, pentagon_reducer, hexagon_reducer);
  for (const auto& step : res.entry.reductions) ctx.report.trace.push_back("Kempe reduction " + step);
  ctx.report.trace.push_back("table entry " + res.entry.figure +
                             (res.entry.rotation ? " rotated " + std::to_string(res.entry.rotation) : ""));
  if (variant == "54" || variant == "6") prepared.emplace(p.regions[0].face, std::make_pair(p.regions[0], work));
  finish_from_subgraph(ctx, p.sub, p.sub_colors(res.coloring), prepared);
}

/// H7+K2 / C3+C5: color the quadrilateral region via its apex-capped planar
/// triangulation, read the induced quadrilateral type, and take the matching
/// Figure 2 coloring.
inline void solve_quad(TorusContext& ctx, const SubgraphMatch& m) {
  const std::string id(to_string(m.pattern));
  auto placed = match_catalog(ctx, id, pattern_graph(m.pattern), m.map);
  if (!placed) fail(ErrorCode::ClassificationAnomaly, id + " subgraph embedding differs from the catalog embedding");
  CatalogPlacement& p = *placed;
  ctx.report.method = "CRITICAL(" + id + ")";
  const Region& quad = p.regions[0];
  const Embedding capped = cap_with_apex(quad.disk);
  const SolveReport planar = solve_planar(capped, ctx.options);
  ctx.stats.nodes += planar.nodes;
  if (planar.status != SolveStatus::Found) fail(ErrorCode::BudgetExceeded, "apex-capped quadrilateral not colored");
  std::vector<Color> work(quad.disk.embedding.num_edges());
  for (EdgeId x = 0; x < quad.disk.embedding.num_edges(); ++x) {
    auto [u, v] = quad.disk.embedding.endpoints(x);
    work[x] = (*planar.coloring)[capped.edge(u, v)];
  }
  const SquareType type = classify_square(colors_along(work, p.labeled[0])).type;
  ctx.report.trace.push_back("apex coloring gives quadrilateral type " + std::string(to_string(type)));
  ObservedSignatures seen;
  seen.quad = type;
  const TableResolution res = apply_case_table(id, seen);
  ctx.report.trace.push_back("table entry " + res.entry.figure);
  std::map<FaceId, std::pair<Region, std::vector<Color>>> prepared;
  prepared.emplace(quad.face, std::make_pair(quad, work));
  finish_from_subgraph(ctx, p.sub, p.sub_colors(res.coloring), prepared);
}

inline void solve_exact_path(TorusContext& ctx) {
  ctx.report.method = "EXACT";
  ExactOptions o;
  o.budget = ctx.options.budget;
  o.threads = ctx.options.threads;
  const ExactResult r = solve_exact(ctx.g, ctx.gfaces, PartialColoring(ctx.g.num_edges()), ExactMode::Find, o);
  ctx.stats.nodes += r.nodes;
  ctx.report.status = r.status;
  if (r.coloring) ctx.report.coloring = r.coloring;
  ctx.report.trace.push_back(r.status == SolveStatus::Unsat ? "exhaustive search: no Grünbaum coloring"
                                                            : "exact search: " + std::string(to_string(r.status)));
}

}  // namespace detail

/// Chromatic-number dispatch for torus triangulations: grid -> ALTSHULER,
/// χ ≤ 4 -> TAIT, χ = 7 -> K7, χ = 6 -> critical subgraph tables,
/// χ = 5 -> EXACT.
inline SolveReport solve_torus(const Embedding& e, const SolveOptions& options = {}) {
  const BudgetMeter clock(options.budget);
  detail::TorusContext ctx{e, trace_faces(e), options, {}, {}};
  if (genus(e, ctx.gfaces) != 1) fail(ErrorCode::PreconditionViolation, "solve_torus needs a torus embedding");
  if (!is_triangulation(ctx.gfaces)) fail(ErrorCode::NotTriangulation, "solve_torus needs a triangulation");
  auto& report = ctx.report;
  auto done = [&]() -> SolveReport {
    report.nodes += ctx.stats.nodes;
    report.millis = clock.millis();
    if (report.status == SolveStatus::Found) detail::assert_grunbaum(e, *report.coloring, report.method);
    return report;
  };

  try {
    if (auto roles = recognize_altshuler(e)) {
      report.method = "ALTSHULER";
      report.trace.push_back("6-regular: grid roles recovered");
      report.coloring = altshuler_coloring(e, *roles);
      report.status = SolveStatus::Found;
      return done();
    }
    const Graph g = e.graph();
    const ChromaticResult chi = chromatic_number_with_witness(g, options.budget);
    report.nodes += chi.nodes;
    report.trace.push_back("chromatic number " + std::to_string(chi.chromatic_number));
    switch (chi.chromatic_number) {
      case 1: case 2: case 3: case 4:
        report.method = "TAIT";
        report.coloring = tait_lift(e, chi.coloring);
        report.status = SolveStatus::Found;
        report.trace.push_back("vertex coloring lifted to edges");
        return done();
      case 7: {
        report.method = "K7";
        auto m = find_subgraph(g, Pattern::K7, options.budget);
        if (!m) fail(ErrorCode::ClassificationAnomaly, "7-chromatic toroidal graph without K7");
        detail::solve_via_grid_roles(ctx, detail::restrict_to_match(e, complete_graph(7), m->map));
        return done();
      }
      case 6: {
        const SubgraphMatch m = classify_six_chromatic(g, options.budget);
        report.trace.push_back("critical subgraph " + std::string(to_string(m.pattern)));
        switch (m.pattern) {
          case Pattern::K6: detail::solve_k6(ctx, m); break;
          case Pattern::H7K2:
          case Pattern::C3C5: detail::solve_quad(ctx, m); break;
          case Pattern::C11Cubed:
            report.method = "CRITICAL(C11CUBED)";
            detail::solve_via_grid_roles(ctx, detail::restrict_to_match(e, c11_cubed_graph(), m.map));
            break;
          case Pattern::K7: fail(ErrorCode::ClassificationAnomaly, "K7 in a 6-chromatic graph");
        }
        return done();
      }
      default:
        report.trace.push_back("χ = 5 has no structural route; exact search");
        detail::solve_exact_path(ctx);
        return done();
    }
  } catch (const Error& err) {
    if (err.code() != ErrorCode::BudgetExceeded) throw;
    report.status = SolveStatus::Unknown;
    report.coloring.reset();
    report.trace.push_back(err.what());
    return done();
  }
}

/// Exact search as a full solve.
inline SolveReport solve_with_exact(const Embedding& e, const PartialColoring& fixed, const SolveOptions& options = {}) {
  const FaceSet faces = trace_faces(e);
  if (!is_triangulation(faces)) fail(ErrorCode::NotTriangulation, "exact solve needs a triangulation");
  ExactOptions o;
  o.budget = options.budget;
  o.threads = options.threads;
  const ExactResult r = solve_exact(e, faces, fixed, ExactMode::Find, o);
  SolveReport report;
  report.method = "EXACT";
  report.status = r.status;
  report.coloring = r.coloring;
  report.nodes = r.nodes;
  report.millis = r.millis;
  if (report.status == SolveStatus::Found) detail::assert_grunbaum(e, *report.coloring, report.method);
  return report;
}

/// Sphere -> solve_planar, torus -> solve_torus.
inline SolveReport solve(const Embedding& e, const SolveOptions& options = {}) {
  const int g = genus(e);
  if (g == 0) return solve_planar(e, options);
  if (g == 1) return solve_torus(e, options);
  fail(ErrorCode::PreconditionViolation, "only sphere and torus embeddings are supported (genus " + std::to_string(g) + ")");
}

}  // namespace grunbaum
