#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "grunbaum/catalog.hpp"
#include "grunbaum/coloring.hpp"

namespace grunbaum {

/// One shipped figure coloring. `colors` lists the color of every edge of
/// the catalog embedding in edge-id order; `claim` is the signature the
/// figure is cited for, read in the catalog's face labeling:
///  - fig2: type of the quadrilateral (C, B1, B2);
///  - fig4 / fig5: square types in labeled-face order;
///  - fig6: heptagon string, pentagon pair and square type. The heptagon is
///    read as pentagon edges 1, 2, the square's three unshared edges, then
///    pentagon edges 4, 5 (pentagon edge 3 is the shared one);
///  - fig7: hexagon class.
struct FigureRecord {
  std::string_view id;
  std::string_view embedding;
  std::string_view claim;
  std::string_view colors;
};

inline constexpr std::array<FigureRecord, 26> kFigureRecords{{
    {"fig2-C3C5-1", "C3C5", "C", "00020110102202110202121"},
    {"fig2-C3C5-2", "C3C5", "B1", "00010112110200210212221"},
    {"fig2-C3C5-3", "C3C5", "B2", "01120100102202010212121"},
    {"fig2-H7K2-1", "H7K2", "C", "10021210001210222100021120"},
    {"fig2-H7K2-2", "H7K2", "B1", "20211100120221120201120001"},
    {"fig2-H7K2-3", "H7K2", "B2", "12120020010102211011210022"},
    {"fig4-i", "444B", "A B1 B1", "012102101010012"},
    {"fig4-ii", "444B", "B2 B2 A", "020111100120201"},
    {"fig4-iii", "444B", "B1 A B1", "012102110001012"},
    {"fig4-iv", "444B", "B1 B1 A", "012012101010102"},
    {"fig4-v", "444B", "A A A", "012012110001102"},
    {"fig4-vi", "444B", "B2 B2 C", "012002011001102"},
    {"fig5-1", "444A", "A B1 B1", "020111102100201"},
    {"fig5-2", "444A", "A B2 B2", "012012110001102"},
    {"fig5-3", "444A", "A A A", "012012101010102"},
    {"fig5-4", "444A", "C C C", "012002001000102"},
    {"fig6-1", "54", "tptpptg 2;5 B1", "012102210002011"},
    {"fig6-2", "54", "tpgpptt 2;3 B1", "212120210002011"},
    {"fig6-3", "54", "tttppgp 4;5 B1", "021001012002211"},
    {"fig6-4", "54", "tpptpgt 2;4 A", "120100102102201"},
    {"fig6-5", "54", "tppgpgg 1;2 A", "102122122102001"},
    {"fig6-6", "54", "ttptppg 4;5 A", "102002201102101"},
    {"fig7-i", "6", "ttpppp", "102002112101102"},
    {"fig7-ii", "6", "ttppgg", "202001221101102"},
    {"fig7-iii", "6", "tpptpp", "012012112001102"},
    {"fig7-iv", "6", "tpgtpg", "021011122002201"},
}};

struct FigureColoring {
  std::string id;
  CriticalEmbedding embedding;
  std::string claim;
  PartialColoring coloring;
};

inline std::vector<std::string> figure_ids() {
  std::vector<std::string> out;
  for (const auto& r : kFigureRecords) out.emplace_back(r.id);
  return out;
}

inline PartialColoring parse_color_string(std::string_view s) {
  std::vector<Color> colors;
  for (char ch : s) {
    if (ch == '.')
      colors.push_back(kNoColor);
    else if (ch >= '0' && ch <= '2')
      colors.push_back(static_cast<Color>(ch - '0'));
    else
      fail(ErrorCode::ParseError, std::string("bad color character '") + ch + "'");
  }
  return PartialColoring(std::move(colors));
}

/// Figure coloring by id; throws UnknownId.
inline FigureColoring figure_coloring(std::string_view id) {
  for (const auto& r : kFigureRecords)
    if (r.id == id) {
      FigureColoring fig{std::string(r.id), critical_embedding(r.embedding), std::string(r.claim),
                         parse_color_string(r.colors)};
      if (fig.coloring.size() != fig.embedding.embedding.num_edges())
        fail(ErrorCode::ParseError, "figure " + fig.id + " does not cover its embedding");
      return fig;
    }
  fail(ErrorCode::UnknownId, "unknown figure coloring '" + std::string(id) + "'");
}

/// All figure colorings with the given id prefix (e.g. "fig4-").
inline std::vector<FigureColoring> figure_colorings(std::string_view prefix = "") {
  std::vector<FigureColoring> out;
  for (const auto& r : kFigureRecords)
    if (r.id.substr(0, prefix.size()) == prefix) out.push_back(figure_coloring(r.id));
  return out;
}

}  // namespace grunbaum
