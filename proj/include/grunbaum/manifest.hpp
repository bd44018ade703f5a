#pragma once

#include <string>
#include <vector>

#include "grunbaum/case_tables.hpp"
#include "grunbaum/catalog.hpp"
#include "grunbaum/figures.hpp"
#include "grunbaum/io.hpp"

namespace grunbaum {

/// Letters for colors with the first-seen color called t, the next p, then g.
inline std::string canonical_letters(std::span<const Color> colors) {
  std::array<char, 3> name{0, 0, 0};
  const char order[] = {'t', 'p', 'g'};
  int next = 0;
  std::string out;
  for (Color c : colors) {
    if (c == kNoColor) {
      out += '.';
      continue;
    }
    if (!name[c]) name[c] = order[next++];
    out += name[c];
  }
  return out;
}

/// Heptagon edges of the (5,4) embedding: pentagon edges 1, 2, the square's
/// three unshared edges, pentagon edges 4, 5.
inline std::vector<EdgeId> heptagon_edges(const CriticalEmbedding& p54) {
  const auto p = p54.face_edges(0);
  const auto s = p54.face_edges(1);
  return {p[0], p[1], s[1], s[2], s[3], p[3], p[4]};
}

/// Signatures a figure coloring induces on its labeled faces, in the same
/// words as its claim.
inline std::string figure_signature(const FigureColoring& fig) {
  const auto& ce = fig.embedding;
  const auto& c = fig.coloring.colors;
  if (ce.id == "444A" || ce.id == "444B") {
    std::string s;
    for (int i = 0; i < 3; ++i)
      s += (i ? " " : "") + std::string(to_string(classify_square(colors_along(c, ce.face_edges(i))).type));
    return s;
  }
  if (ce.id == "54")
    return canonical_letters(colors_along(c, heptagon_edges(ce))) + " " +
           classify_pentagon(colors_along(c, ce.face_edges(0))).to_string() + " " +
           std::string(to_string(classify_square(colors_along(c, ce.face_edges(1))).type));
  if (ce.id == "6") return std::string(to_string(classify_hexagon(colors_along(c, ce.face_edges(0))).cls));
  return std::string(to_string(classify_square(colors_along(c, ce.face_edges(0))).type));
}

struct DataFile {
  std::string path;  // relative to the data directory
  std::string content;
};

inline std::string embedding_file_name(const std::string& id) { return "embeddings/" + id + ".emb"; }

/// Every shipped catalog file plus manifest.json, generated from the
/// library so that the checked-in copies can be compared against it.
inline std::vector<DataFile> catalog_files() {
  std::vector<DataFile> files;
  Json manifest;
  manifest["version"] = 1;
  manifest["conventions"] = {
      {"faces", "next dart in a face = rotation successor of the twin; rotations counterclockwise"},
      {"labeled_faces", "edge j of a labeled face joins its vertices j and j+1; signatures are read in this order"},
      {"heptagon", "(5,4) heptagon = pentagon edges 1,2, square edges 2,3,4, pentagon edges 4,5; pentagon edge 3 = square edge 1"},
      {"letters", "first color seen is t, the next p, the last g"},
      {"altshuler", "T(r,c,s): vertex (i,j) = i*c+j; columns wrap plainly, rows wrap with a shift of s columns"}};

  Json embeddings = Json::array();
  auto add_embedding = [&](const std::string& id, const Embedding& e, const std::vector<std::vector<Vertex>>& labeled) {
    const FaceSet faces = trace_faces(e);
    files.push_back({embedding_file_name(id), write_emb(e, id)});
    embeddings.push_back({{"id", id},
                          {"file", embedding_file_name(id)},
                          {"V", e.num_vertices()},
                          {"E", e.num_edges()},
                          {"genus", genus(e, faces)},
                          {"face_census", faces.census()},
                          {"labeled_faces", labeled}});
  };
  for (const char* id : {"444A", "444B", "54", "6", "H7K2", "C3C5"}) {
    const auto ce = critical_embedding(id);
    add_embedding(std::string(ce.id == "H7K2" || ce.id == "C3C5" ? "" : "k6_") + ce.id, ce.embedding, ce.labeled_faces);
  }
  add_embedding("C11CUBED", gen_named("C11^3"), {});
  add_embedding("K7", gen_named("K7"), {});
  add_embedding("octahedron", octahedron(), {});
  add_embedding("icosahedron", icosahedron(), {});
  add_embedding("T330", gen_altshuler(3, 3, 0).embedding, {});
  manifest["embeddings"] = embeddings;

  Json figures = Json::array();
  for (const auto& id : figure_ids()) {
    const auto fig = figure_coloring(id);
    const std::string file = "figures/" + id + ".gcol";
    files.push_back({file, write_gcol(fig.embedding.embedding, fig.coloring.colors, id + " on " + fig.embedding.id)});
    const std::string emb_id = (fig.embedding.id == "H7K2" || fig.embedding.id == "C3C5" ? "" : "k6_") + fig.embedding.id;
    figures.push_back({{"id", id},
                       {"embedding", emb_id},
                       {"file", file},
                       {"claim", fig.claim},
                       {"signatures", figure_signature(fig)}});
  }
  manifest["figures"] = figures;

  Json tables;
  Json b;
  for (const auto& row : k444BTable)
    for (std::size_t pos = 0; pos + 3 <= row.triples.size(); pos += 4) b[std::string(row.triples.substr(pos, 3))] = row.figure;
  tables["444B"] = b;
  Json a;
  for (const auto& row : k444ATable)
    for (std::size_t pos = 0; pos + 3 <= row.triples.size(); pos += 4) a[std::string(row.triples.substr(pos, 3))] = row.figure;
  tables["444A"] = {{"entries", a}, {"rotation", k444ARotation}};
  Json p54;
  for (const auto& [name, rules] : {std::pair{"type1/2 (square A)", &k54TypeA}, std::pair{"type3 (square B1)", &k54TypeB1}}) {
    Json rows;
    for (const auto& r : *rules) {
      const std::string key = std::to_string(r.a) + ";" + std::to_string(r.b);
      if (r.pinned == 0)
        rows[key] = r.figure;
      else
        rows[key] = "reduce: keep " + std::to_string(r.pinned) + ", move " + std::to_string(r.pinned == r.a ? r.b : r.a);
    }
    p54[name] = rows;
  }
  tables["54"] = p54;
  Json six;
  for (HexagonClass cls : kHexagonClasses) {
    if (auto fig = hexagon_figure(cls)) {
      six[std::string(to_string(cls))] = *fig;
    } else {
      Json targets = Json::array();
      for (HexagonClass t : hexagon_reduction_targets(cls)) targets.push_back(std::string(to_string(t)));
      six[std::string(to_string(cls))] = {{"reduce", cls == HexagonClass::pppppp ? "p-t on first p" : "p-g on first p"},
                                          {"targets", targets}};
    }
  }
  tables["6"] = six;
  tables["H7K2"] = {{"C", "fig2-H7K2-1"}, {"B1", "fig2-H7K2-2"}, {"B2", "fig2-H7K2-3"}};
  tables["C3C5"] = {{"C", "fig2-C3C5-1"}, {"B1", "fig2-C3C5-2"}, {"B2", "fig2-C3C5-3"}};
  manifest["case_tables"] = tables;

  files.push_back({"manifest.json", manifest.dump(2) + "\n"});
  return files;
}

}  // namespace grunbaum
