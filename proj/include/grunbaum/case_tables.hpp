#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grunbaum/figures.hpp"
#include "grunbaum/isomorphism.hpp"
#include "grunbaum/signature.hpp"

namespace grunbaum {

// ------------------------------------------------------------ square types

/// Coloring type of a triangulated square: which boundary types its interior
/// can realize. Type 1 = {A, B1}, type 2 = {A, B2}, type 3 = {C, B1, B2}.
enum class SquareClass { Type1 = 1, Type2 = 2, Type3 = 3 };

inline constexpr std::array<SquareClass, 3> kSquareClasses{SquareClass::Type1, SquareClass::Type2,
                                                           SquareClass::Type3};

inline constexpr int to_int(SquareClass c) { return static_cast<int>(c); }

inline std::vector<SquareType> square_class_members(SquareClass c) {
  switch (c) {
    case SquareClass::Type1: return {SquareType::A, SquareType::B1};
    case SquareClass::Type2: return {SquareType::A, SquareType::B2};
    case SquareClass::Type3: return {SquareType::C, SquareType::B1, SquareType::B2};
  }
  return {};
}

/// First class whose members are all achievable; throws ClassificationAnomaly
/// when the set contains none of the three (the A/B/C lemma forbids this).
inline SquareClass square_class(const std::set<SquareType>& achievable) {
  for (SquareClass c : kSquareClasses) {
    const auto members = square_class_members(c);
    if (std::all_of(members.begin(), members.end(), [&](SquareType t) { return achievable.count(t) > 0; })) return c;
  }
  std::string s;
  for (SquareType t : achievable) s += std::string(s.empty() ? "" : ",") + std::string(to_string(t));
  fail(ErrorCode::ClassificationAnomaly, "square realizes {" + s + "}, which is not of type 1, 2 or 3");
}

inline std::string triple_string(const std::array<SquareClass, 3>& t) {
  return std::to_string(to_int(t[0])) + std::to_string(to_int(t[1])) + std::to_string(to_int(t[2]));
}

/// Result of a table lookup: the figure coloring to use and, for (4,4,4)_A,
/// the power of the cylinder rotation to apply to it.
struct CaseEntry {
  std::string figure;
  int rotation = 0;
  std::vector<std::string> reductions;  // Kempe reductions applied, in order

  bool operator==(const CaseEntry&) const = default;
};

// ------------------------------------------------------------ (4,4,4)_B

struct TripleRow {
  std::string_view triples;  // space-separated type triples
  std::string_view figure;
};

/// All 27 type triples of (4,4,4)_B, grouped by the coloring that serves them.
inline constexpr std::array<TripleRow, 6> k444BTable{{
    {"111 112 121 211 221 212 122 222", "fig4-v"},  // A A A
    {"113 123 311 313 321", "fig4-iii"},           // B1 A B1
    {"223 233 323 333", "fig4-vi"},                // B2 B2 C
    {"213 131 133 231", "fig4-i"},                 // A B1 B1
    {"331 332 132 312", "fig4-iv"},                // B1 B1 A
    {"232 322", "fig4-ii"},                        // B2 B2 A
}};

inline bool row_contains(std::string_view row, std::string_view key) {
  for (std::size_t pos = 0; pos + 3 <= row.size(); pos += 4)
    if (row.substr(pos, 3) == key) return true;
  return false;
}

inline CaseEntry resolve_444b(const std::array<SquareClass, 3>& types) {
  const std::string key = triple_string(types);
  for (const auto& row : k444BTable)
    if (row_contains(row.triples, key)) return {std::string(row.figure), 0, {}};
  fail(ErrorCode::NoTableEntry, "(4,4,4)_B has no entry for " + key);
}

// ------------------------------------------------------------ (4,4,4)_A

/// The 11 rotation classes of (4,4,4)_A triples.
inline constexpr std::array<TripleRow, 4> k444ATable{{
    {"113 133 233 231 213", "fig5-1"},  // A B1 B1
    {"223", "fig5-2"},                  // A B2 B2
    {"111 112 122 222", "fig5-3"},      // A A A
    {"333", "fig5-4"},                  // C C C
}};

/// Vertex map of the cylinder rotation of (4,4,4)_A; it carries labeled square
/// i onto labeled square i+1, starting vertex included.
inline constexpr std::array<Vertex, 6> k444ARotation{4, 0, 3, 5, 1, 2};

/// Finds the smallest shift k such that (t_k, t_k+1, t_k+2) is listed; the
/// listed coloring is then rotated k steps along the cylinder.
inline CaseEntry resolve_444a(const std::array<SquareClass, 3>& types) {
  for (int k = 0; k < 3; ++k) {
    const std::array<SquareClass, 3> shifted{types[k], types[(k + 1) % 3], types[(k + 2) % 3]};
    const std::string key = triple_string(shifted);
    for (const auto& row : k444ATable)
      if (row_contains(row.triples, key)) return {std::string(row.figure), k, {}};
  }
  fail(ErrorCode::NoTableEntry, "(4,4,4)_A has no entry for " + triple_string(types));
}

/// Rotates a coloring of the (4,4,4)_A catalog embedding `k` steps: the
/// result colors sigma^k(x) with the color of x.
inline PartialColoring rotate_444a(const Embedding& e, const PartialColoring& c, int k) {
  PartialColoring out = c;
  for (int step = 0; step < ((k % 3) + 3) % 3; ++step) {
    PartialColoring next(e.num_edges());
    for (EdgeId x = 0; x < e.num_edges(); ++x) {
      auto [u, v] = e.endpoints(x);
      next[e.edge(k444ARotation[u], k444ARotation[v])] = out[x];
    }
    out = next;
  }
  return out;
}

// ------------------------------------------------------------------ (5,4)

/// A pentagon Kempe reduction: the singleton at `pinned` stays, the
/// singleton at `moving` is swapped with the tripled color along its chain.
struct PentagonMove {
  int pinned = 0;
  int moving = 0;
};

/// Positions reachable by one move: the nearest tripled edge to `moving` on
/// either side of the pentagon, passing over the pinned edge.
inline std::array<int, 2> pentagon_move_targets(PentagonMove m) {
  auto step = [&](int dir) {
    int x = m.moving;
    do x = (x - 1 + dir + 5) % 5 + 1;
    while (x == m.pinned);
    return x;
  };
  auto a = step(+1), b = step(-1);
  return {std::min(a, b), std::max(a, b)};
}

struct PentagonRule {
  int a = 0, b = 0;     // the signature {a, b}
  int pinned = 0;       // 0 for base signatures
  std::string_view figure;  // base signatures only
};

/// Square of type 1 or 2, colored A.
inline constexpr std::array<PentagonRule, 10> k54TypeA{{
    {2, 4, 0, "fig6-4"}, {1, 2, 0, "fig6-5"}, {4, 5, 0, "fig6-6"},
    {1, 4, 4, ""}, {3, 4, 4, ""}, {1, 3, 1, ""}, {1, 5, 1, ""},
    {2, 3, 2, ""}, {2, 5, 2, ""}, {3, 5, 3, ""},
}};

/// Square of type 3, colored B1.
inline constexpr std::array<PentagonRule, 10> k54TypeB1{{
    {2, 5, 0, "fig6-1"}, {2, 3, 0, "fig6-2"}, {4, 5, 0, "fig6-3"},
    {2, 4, 2, ""}, {1, 2, 2, ""}, {1, 5, 5, ""}, {3, 5, 5, ""},
    {1, 4, 4, ""}, {3, 4, 4, ""}, {1, 3, 1, ""},
}};

inline const std::array<PentagonRule, 10>& pentagon_rules(SquareClass square) {
  return square == SquareClass::Type3 ? k54TypeB1 : k54TypeA;
}

inline const PentagonRule& pentagon_rule(SquareClass square, int j, int k) {
  const int a = std::min(j, k), b = std::max(j, k);
  for (const auto& r : pentagon_rules(square))
    if (r.a == a && r.b == b) return r;
  fail(ErrorCode::NoTableEntry, "no (5,4) rule for " + std::to_string(a) + ";" + std::to_string(b));
}

/// Performs a pentagon move on a concrete coloring and reports the new
/// signature.
using PentagonReducer = std::function<PentagonSignature(PentagonMove)>;

inline constexpr int kMaxReductions = 16;

/// Follows the documented reductions from `start` until a base signature is
/// reached, then returns its Figure 6 entry.
inline CaseEntry resolve_54(SquareClass square, PentagonSignature start, const PentagonReducer& reduce) {
  CaseEntry entry;
  PentagonSignature current = start;
  for (int i = 0; i <= kMaxReductions; ++i) {
    const auto& rule = pentagon_rule(square, current.j, current.k);
    if (rule.pinned == 0) {
      entry.figure = std::string(rule.figure);
      return entry;
    }
    if (!reduce) fail(ErrorCode::NoTableEntry, "(5,4) signature " + current.to_string() + " needs a reduction");
    const PentagonMove move{rule.pinned, rule.pinned == rule.a ? rule.b : rule.a};
    const PentagonSignature next = reduce(move);
    entry.reductions.push_back(current.to_string() + "->" + next.to_string());
    current = next;
  }
  fail(ErrorCode::NoTableEntry, "(5,4) reductions from " + start.to_string() + " did not terminate");
}

// -------------------------------------------------------------------- (6)

inline std::optional<std::string_view> hexagon_figure(HexagonClass cls) {
  switch (cls) {
    case HexagonClass::ttpppp: return "fig7-i";
    case HexagonClass::ttppgg: return "fig7-ii";
    case HexagonClass::tpptpp: return "fig7-iii";
    case HexagonClass::tpgtpg: return "fig7-iv";
    default: return std::nullopt;
  }
}

/// Classes a single reduction of `cls` may produce.
inline std::vector<HexagonClass> hexagon_reduction_targets(HexagonClass cls) {
  using H = HexagonClass;
  switch (cls) {
    case H::tpgtgp: return {H::tpgtpg, H::tpptpp};
    case H::tpptgg: return {H::tpptpp, H::tpgtpg};
    case H::ttpgpg: return {H::tpptgg, H::ttppgg};
    case H::tptppp: return {H::ttpgpg};
    case H::pppppp: return {H::ttpppp, H::tptppp, H::tpptpp};
    default: return {};
  }
}

/// Hexagon Kempe reduction: swap colors `a` and `b` along the chain through
/// hexagon edge `edge` (0-based, labeled order).
struct HexagonMove {
  int edge = 0;
  Color a = 0;
  Color b = 0;
};

/// The move the (6) lemma prescribes for a non-realizable class: a p-g change
/// (p-t for pppppp) on the first p edge of the class witness.
inline HexagonMove hexagon_move(const HexagonSignature& sig) {
  const auto pattern = to_string(sig.cls);
  const int first_p = static_cast<int>(pattern.find('p'));
  const int other = sig.cls == HexagonClass::pppppp ? 0 : 2;
  return {sig.placement.edge(first_p), sig.letters[1], sig.letters[other]};
}

using HexagonReducer = std::function<std::array<Color, 6>(HexagonMove)>;

struct HexagonResolution {
  CaseEntry entry;
  std::array<Color, 6> colors{};  // final hexagon colors, labeled order
};

inline HexagonResolution resolve_6(std::array<Color, 6> colors, const HexagonReducer& reduce) {
  HexagonResolution res;
  for (int i = 0; i <= kMaxReductions; ++i) {
    const HexagonSignature sig = classify_hexagon(colors);
    if (auto fig = hexagon_figure(sig.cls)) {
      res.entry.figure = std::string(*fig);
      res.colors = colors;
      return res;
    }
    if (!reduce) fail(ErrorCode::NoTableEntry, "(6) class " + std::string(to_string(sig.cls)) + " needs a reduction");
    const auto next = reduce(hexagon_move(sig));
    res.entry.reductions.push_back(std::string(to_string(sig.cls)) + "->" +
                                   std::string(to_string(classify_hexagon(next).cls)));
    colors = next;
  }
  fail(ErrorCode::NoTableEntry, "(6) reductions did not terminate");
}

/// Coloring of the (6) catalog embedding whose hexagon carries exactly
/// `target` (labeled order), obtained from a Figure 7 entry by a rotation
/// of the embedding and a color permutation.
inline std::optional<PartialColoring> place_hexagon_entry(const CriticalEmbedding& six, const PartialColoring& entry,
                                                          const std::array<Color, 6>& target) {
  const auto hex = six.face_edges(0);
  for (const auto& aut : map_automorphisms(six.embedding, true)) {
    PartialColoring moved(six.embedding.num_edges());
    for (EdgeId x = 0; x < six.embedding.num_edges(); ++x) moved[aut.edge(x)] = entry[x];
    const auto seen = colors_along(moved.colors, hex);
    std::array<Color, 3> perm{kNoColor, kNoColor, kNoColor};
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      if (perm[seen[i]] == kNoColor) {
        if (std::find(perm.begin(), perm.end(), target[i]) != perm.end()) ok = false;
        else perm[seen[i]] = target[i];
      } else if (perm[seen[i]] != target[i]) {
        ok = false;
      }
    }
    if (!ok) continue;
    permute_colors(moved.colors, complete_letters(perm));
    return moved;
  }
  return std::nullopt;
}

// ---------------------------------------------------- H7+K2 and C3+C5 quads

inline CaseEntry resolve_quad(std::string_view id, SquareType quad) {
  switch (quad) {
    case SquareType::C: return {"fig2-" + std::string(id) + "-1", 0, {}};
    case SquareType::B1: return {"fig2-" + std::string(id) + "-2", 0, {}};
    case SquareType::B2: return {"fig2-" + std::string(id) + "-3", 0, {}};
    case SquareType::A: break;
  }
  fail(ErrorCode::NoTableEntry, std::string(id) + " quadrilateral colored A cannot come from an apex coloring");
}

// ----------------------------------------------------------- dispatching

/// Signatures observed on the non-triangular faces of a critical embedding.
struct ObservedSignatures {
  std::vector<SquareClass> squares;             // 444A, 444B: three; 54: one
  std::optional<PentagonSignature> pentagon;    // 54
  std::optional<std::array<Color, 6>> hexagon;  // 6: colors in labeled order
  std::optional<SquareType> quad;               // H7K2, C3C5
};

struct TableResolution {
  CaseEntry entry;
  PartialColoring coloring;  // on the catalog embedding
};

/// Looks up the case table of a critical embedding. Reductions are carried
/// out through the reducer callbacks, which must apply the Kempe change to
/// the concrete disk coloring and report the resulting boundary.
inline TableResolution apply_case_table(std::string_view variant, const ObservedSignatures& seen,
                                        const PentagonReducer& pentagon_reducer = {},
                                        const HexagonReducer& hexagon_reducer = {}) {
  auto need = [&](bool ok, const char* what) {
    if (!ok) fail(ErrorCode::PreconditionViolation, std::string(variant) + " lookup needs " + what);
  };
  TableResolution res;
  if (variant == "444A" || variant == "444B") {
    need(seen.squares.size() == 3, "three square types");
    const std::array<SquareClass, 3> t{seen.squares[0], seen.squares[1], seen.squares[2]};
    res.entry = variant == "444A" ? resolve_444a(t) : resolve_444b(t);
    const auto fig = figure_coloring(res.entry.figure);
    res.coloring = variant == "444A" ? rotate_444a(fig.embedding.embedding, fig.coloring, res.entry.rotation)
                                     : fig.coloring;
  } else if (variant == "54") {
    need(seen.squares.size() == 1 && seen.pentagon.has_value(), "a pentagon signature and a square type");
    res.entry = resolve_54(seen.squares[0], *seen.pentagon, pentagon_reducer);
    res.coloring = figure_coloring(res.entry.figure).coloring;
  } else if (variant == "6") {
    need(seen.hexagon.has_value(), "hexagon colors");
    auto hex = resolve_6(*seen.hexagon, hexagon_reducer);
    res.entry = std::move(hex.entry);
    const auto fig = figure_coloring(res.entry.figure);
    auto placed = place_hexagon_entry(fig.embedding, fig.coloring, hex.colors);
    if (!placed) fail(ErrorCode::NoTableEntry, "no placement of " + res.entry.figure + " matches the hexagon");
    res.coloring = std::move(*placed);
  } else if (variant == "H7K2" || variant == "C3C5") {
    need(seen.quad.has_value(), "the quadrilateral type");
    res.entry = resolve_quad(variant, *seen.quad);
    res.coloring = figure_coloring(res.entry.figure).coloring;
  } else {
    fail(ErrorCode::UnknownId, "no case table for '" + std::string(variant) + "'");
  }
  return res;
}

}  // namespace grunbaum
