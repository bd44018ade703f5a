#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grunbaum/coloring.hpp"
#include "grunbaum/embedding.hpp"
#include "grunbaum/solver.hpp"

namespace grunbaum {

namespace detail {

inline std::string strip_comment(std::string line) {
  if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
  return line;
}

inline bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

inline long parse_int(const std::string& token, int line_no) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || token.empty())
    fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected an integer, got '" + token + "'");
  return value;
}

}  // namespace detail

// -------------------------------------------------------------------- .emb

/// Parses the .emb format: `vertices: V`, then `v: n1 n2 ...` per vertex
/// (counterclockwise neighbor order); `#` starts a comment.
inline Embedding parse_emb(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  long n = -1;
  std::vector<std::vector<Vertex>> rotations;
  std::vector<char> seen;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": missing ':'");
    std::istringstream head(line.substr(0, colon));
    std::string key;
    head >> key;
    std::string extra;
    if (key.empty() || (head >> extra)) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": bad key");
    std::istringstream rest(line.substr(colon + 1));
    std::vector<std::string> tokens;
    for (std::string t; rest >> t;) tokens.push_back(t);
    if (n < 0) {
      if (key != "vertices" || tokens.size() != 1)
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 'vertices: <V>' header");
      n = detail::parse_int(tokens[0], line_no);
      if (n < 1 || n > 1'000'000) fail(ErrorCode::ParseError, "vertex count out of range");
      rotations.assign(static_cast<std::size_t>(n), {});
      seen.assign(static_cast<std::size_t>(n), 0);
      continue;
    }
    const long v = detail::parse_int(key, line_no);
    if (v < 0 || v >= n) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex id out of range");
    if (seen[v]) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": vertex " + key + " listed twice");
    seen[v] = 1;
    for (const auto& t : tokens) {
      const long w = detail::parse_int(t, line_no);
      if (w < 0 || w >= n)
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": neighbor " + t + " out of range");
      rotations[v].push_back(static_cast<Vertex>(w));
    }
  }
  if (n < 0) fail(ErrorCode::ParseError, "missing 'vertices:' header");
  for (long v = 0; v < n; ++v)
    if (!seen[v]) fail(ErrorCode::ParseError, "vertex " + std::to_string(v) + " has no rotation line");
  return Embedding::from_rotations(std::move(rotations));
}

inline std::string write_emb(const Embedding& e, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  out << "vertices: " << e.num_vertices() << "\n";
  for (Vertex v = 0; v < e.num_vertices(); ++v) {
    out << v << ":";
    for (Vertex w : e.rotation(v)) out << " " << w;
    out << "\n";
  }
  return out.str();
}

// ------------------------------------------------------------------- .gcol

/// Parses `u v color` lines against an embedding. Missing edges stay
/// uncolored; unknown or repeated edges are parse errors.
inline PartialColoring parse_gcol(std::string_view text, const Embedding& e) {
  std::istringstream in{std::string(text)};
  PartialColoring c(e.num_edges());
  std::vector<char> seen(e.num_edges(), 0);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = detail::strip_comment(raw);
    if (detail::blank(line)) continue;
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.size() != 3) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected '<u> <v> <color>'");
    const long u = detail::parse_int(tokens[0], line_no);
    const long v = detail::parse_int(tokens[1], line_no);
    const long col = detail::parse_int(tokens[2], line_no);
    auto id = e.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!id) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": no edge " + tokens[0] + "-" + tokens[1]);
    if (seen[*id]) fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": edge colored twice");
    if (col < 0 || col >= kNumColors)
      fail(ErrorCode::InvalidColor, "line " + std::to_string(line_no) + ": color " + tokens[2] + " not in {0,1,2}");
    seen[*id] = 1;
    c[*id] = static_cast<Color>(col);
  }
  return c;
}

/// Writes colored edges in edge-id order as `u v color` with u < v.
inline std::string write_gcol(const Embedding& e, std::span<const Color> colors, std::string_view comment = {}) {
  std::ostringstream out;
  if (!comment.empty()) out << "# " << comment << "\n";
  for (EdgeId x = 0; x < e.num_edges(); ++x) {
    if (colors[x] == kNoColor) continue;
    auto [u, v] = e.endpoints(x);
    out << u << " " << v << " " << static_cast<int>(colors[x]) << "\n";
  }
  return out.str();
}

// -------------------------------------------------------------------- files

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write '" + path + "'");
  out << content;
}

inline Embedding load_emb(const std::string& path) { return parse_emb(read_file(path)); }
inline PartialColoring load_gcol(const std::string& path, const Embedding& e) { return parse_gcol(read_file(path), e); }

// --------------------------------------------------------------------- JSON

using Json = nlohmann::ordered_json;

inline Json coloring_json(const Embedding& e, std::span<const Color> colors) {
  Json arr = Json::array();
  for (EdgeId x = 0; x < e.num_edges(); ++x) {
    if (colors[x] == kNoColor) continue;
    auto [u, v] = e.endpoints(x);
    arr.push_back({u, v, static_cast<int>(colors[x])});
  }
  return arr;
}

inline Json report_json(const Embedding& e, const SolveReport& r) {
  Json j;
  j["status"] = std::string(to_string(r.status));
  j["method"] = r.method;
  if (r.coloring) j["coloring"] = coloring_json(e, r.coloring->colors);
  j["stats"] = {{"nodes", r.nodes}, {"millis", r.millis}};
  j["trace"] = r.trace;
  return j;
}

inline Json verification_json(const VerificationReport& r) {
  Json j;
  j["status"] = r.pass ? "pass" : "fail";
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json colors = Json::array();
    for (Color c : v.colors) colors.push_back(static_cast<int>(c));
    violations.push_back({{"face", v.face}, {"colors", colors}});
  }
  j["violations"] = violations;
  j["coverage"] = {{"colored_edges", r.colored_edges},
                   {"total_edges", r.total_edges},
                   {"checked_triangles", r.checked_triangles},
                   {"total_triangles", r.total_triangles}};
  return j;
}

}  // namespace grunbaum
