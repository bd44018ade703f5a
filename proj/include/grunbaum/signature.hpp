#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grunbaum/coloring.hpp"

namespace grunbaum {

// Letters t, p, g name colors by role. `letters[i]` below is the concrete
// color playing role i (0 = t, 1 = p, 2 = g).
using LetterMap = std::array<Color, 3>;

inline std::array<int, 3> color_counts(std::span<const Color> colors) {
  std::array<int, 3> count{};
  for (Color c : colors) {
    if (c < 0 || c >= kNumColors) fail(ErrorCode::ColoringIncomplete, "boundary edge without a color");
    ++count[c];
  }
  return count;
}

/// Completes a partial role -> color assignment with the unused colors in
/// increasing order.
inline LetterMap complete_letters(std::array<Color, 3> partial) {
  std::array<bool, 3> used{};
  for (Color c : partial)
    if (c != kNoColor) used[c] = true;
  Color next = 0;
  for (Color& c : partial)
    if (c == kNoColor) {
      while (used[next]) ++next;
      c = next;
      used[next] = true;
    }
  return partial;
}

/// Matches `colors` against a pattern string over {t,p,g} up to a bijection
/// of letters and colors.
inline std::optional<LetterMap> match_pattern(std::span<const Color> colors, std::string_view pattern) {
  if (colors.size() != pattern.size()) return std::nullopt;
  std::array<Color, 3> role{kNoColor, kNoColor, kNoColor};
  std::array<int, 3> owner{-1, -1, -1};
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const int letter = pattern[i] == 't' ? 0 : pattern[i] == 'p' ? 1 : 2;
    const Color c = colors[i];
    if (c < 0 || c >= kNumColors) return std::nullopt;
    if (role[letter] == kNoColor && owner[c] == -1) {
      role[letter] = c;
      owner[c] = letter;
    } else if (role[letter] != c || owner[c] != letter) {
      return std::nullopt;
    }
  }
  return complete_letters(role);
}

// ---------------------------------------------------------------- squares

enum class SquareType { A, B1, B2, C };

inline constexpr std::string_view to_string(SquareType t) {
  switch (t) {
    case SquareType::A: return "A";
    case SquareType::B1: return "B1";
    case SquareType::B2: return "B2";
    case SquareType::C: return "C";
  }
  return "?";
}

/// Canonical pattern of each type read from the cycle's fixed start edge.
inline constexpr std::string_view square_pattern(SquareType t) {
  switch (t) {
    case SquareType::A: return "tptp";
    case SquareType::B1: return "ttpp";
    case SquareType::B2: return "tppt";
    case SquareType::C: return "tttt";
  }
  return "";
}

inline constexpr std::array<SquareType, 4> kSquareTypes{SquareType::A, SquareType::B1, SquareType::B2, SquareType::C};

struct SquareSignature {
  SquareType type;
  LetterMap letters;  // colors realizing t, p (and the unused g)
};

/// Classifies four colors read from a fixed start edge in a fixed direction.
inline SquareSignature classify_square(std::span<const Color> colors) {
  if (colors.size() != 4) fail(ErrorCode::PreconditionViolation, "square needs four colors");
  const auto count = color_counts(colors);
  int distinct = 0;
  for (int n : count) distinct += n > 0;
  if (distinct == 3) fail(ErrorCode::MixedTriple, "three colors on a square: " + color_string(colors));
  for (SquareType t : kSquareTypes)
    if (auto letters = match_pattern(colors, square_pattern(t))) return {t, *letters};
  fail(ErrorCode::BadParity, "odd color count on a square: " + color_string(colors));
}

/// Boundary colors realizing a square type with t = 0, p = 1.
inline std::array<Color, 4> canonical_square_colors(SquareType t) {
  std::array<Color, 4> out{};
  const auto pattern = square_pattern(t);
  for (int i = 0; i < 4; ++i) out[i] = pattern[i] == 't' ? 0 : 1;
  return out;
}

// -------------------------------------------------------------- pentagons

/// Unordered pair of 1-based positions holding the two singleton colors of a
/// (3,1,1)-colored pentagon.
struct PentagonSignature {
  int j = 0;  // j < k
  int k = 0;
  LetterMap letters{};  // t = tripled color, p = color at j, g = color at k

  bool same_pair(const PentagonSignature& o) const { return j == o.j && k == o.k; }
  std::string to_string() const { return std::to_string(j) + ";" + std::to_string(k); }
};

inline PentagonSignature make_pentagon_pair(int a, int b) {
  if (a == b || a < 1 || a > 5 || b < 1 || b > 5) fail(ErrorCode::PreconditionViolation, "bad pentagon positions");
  PentagonSignature s;
  s.j = std::min(a, b);
  s.k = std::max(a, b);
  return s;
}

inline PentagonSignature classify_pentagon(std::span<const Color> colors) {
  if (colors.size() != 5) fail(ErrorCode::PreconditionViolation, "pentagon needs five colors");
  const auto count = color_counts(colors);
  Color triple = kNoColor;
  for (Color c = 0; c < 3; ++c)
    if (count[c] == 3) triple = c;
  bool ok = triple != kNoColor;
  for (Color c = 0; c < 3 && ok; ++c)
    if (c != triple && count[c] != 1) ok = false;
  if (!ok) fail(ErrorCode::BadParity, "pentagon colors are not (3,1,1): " + color_string(colors));
  PentagonSignature s;
  std::vector<int> singles;
  for (int i = 0; i < 5; ++i)
    if (colors[i] != triple) singles.push_back(i + 1);
  s.j = singles[0];
  s.k = singles[1];
  s.letters = {triple, colors[s.j - 1], colors[s.k - 1]};
  return s;
}

/// The ten unordered signatures in lexicographic order.
inline std::vector<PentagonSignature> all_pentagon_signatures() {
  std::vector<PentagonSignature> out;
  for (int a = 1; a <= 5; ++a)
    for (int b = a + 1; b <= 5; ++b) out.push_back(make_pentagon_pair(a, b));
  return out;
}

/// Boundary colors with t = 0 on the tripled edges, 1 at j and 2 at k.
inline std::array<Color, 5> canonical_pentagon_colors(int j, int k) {
  std::array<Color, 5> out{0, 0, 0, 0, 0};
  out[j - 1] = 1;
  out[k - 1] = 2;
  return out;
}

// --------------------------------------------------------------- hexagons

enum class HexagonClass { pppppp, ttpppp, tptppp, tpptpp, ttppgg, ttpgpg, tpgtgp, tpgtpg, tpptgg };

inline constexpr std::array<HexagonClass, 9> kHexagonClasses{
    HexagonClass::pppppp, HexagonClass::ttpppp, HexagonClass::tptppp, HexagonClass::tpptpp, HexagonClass::ttppgg,
    HexagonClass::ttpgpg, HexagonClass::tpgtgp, HexagonClass::tpgtpg, HexagonClass::tpptgg};

inline constexpr std::string_view to_string(HexagonClass h) {
  switch (h) {
    case HexagonClass::pppppp: return "pppppp";
    case HexagonClass::ttpppp: return "ttpppp";
    case HexagonClass::tptppp: return "tptppp";
    case HexagonClass::tpptpp: return "tpptpp";
    case HexagonClass::ttppgg: return "ttppgg";
    case HexagonClass::ttpgpg: return "ttpgpg";
    case HexagonClass::tpgtgp: return "tpgtgp";
    case HexagonClass::tpgtpg: return "tpgtpg";
    case HexagonClass::tpptgg: return "tpptgg";
  }
  return "";
}

/// Dihedral placement: class-string position i sits on hexagon edge
/// (rotation + i) mod 6, or (rotation - i) mod 6 when reflected.
struct DihedralPlacement {
  int rotation = 0;
  bool reflected = false;

  int edge(int i) const { return reflected ? ((rotation - i) % 6 + 6) % 6 : (rotation + i) % 6; }
};

struct HexagonSignature {
  HexagonClass cls;
  DihedralPlacement placement;
  LetterMap letters;  // concrete color of t, p, g
};

inline std::optional<HexagonSignature> match_hexagon_class(std::span<const Color> colors, HexagonClass cls) {
  const auto pattern = to_string(cls);
  for (int refl = 0; refl < 2; ++refl)
    for (int rot = 0; rot < 6; ++rot) {
      DihedralPlacement place{rot, refl == 1};
      std::array<Color, 6> seen{};
      for (int i = 0; i < 6; ++i) seen[i] = colors[place.edge(i)];
      if (auto letters = match_pattern(seen, pattern)) return HexagonSignature{cls, place, *letters};
    }
  return std::nullopt;
}

inline HexagonSignature classify_hexagon(std::span<const Color> colors) {
  if (colors.size() != 6) fail(ErrorCode::PreconditionViolation, "hexagon needs six colors");
  const auto count = color_counts(colors);
  for (int n : count)
    if (n % 2 != 0) fail(ErrorCode::BadParity, "odd color count on a hexagon: " + color_string(colors));
  for (HexagonClass cls : kHexagonClasses)
    if (auto sig = match_hexagon_class(colors, cls)) return *sig;
  fail(ErrorCode::BadParity, "hexagon coloring matches no class: " + color_string(colors));
}

/// Concrete hexagon colors for a class under a placement and letter map.
inline std::array<Color, 6> place_hexagon(HexagonClass cls, DihedralPlacement place, LetterMap letters = {0, 1, 2}) {
  const auto pattern = to_string(cls);
  std::array<Color, 6> out{};
  for (int i = 0; i < 6; ++i) {
    const int letter = pattern[i] == 't' ? 0 : pattern[i] == 'p' ? 1 : 2;
    out[place.edge(i)] = letters[letter];
  }
  return out;
}

}  // namespace grunbaum
