#pragma once

// Command-line front end. `run` takes the arguments after the program name
// and writes to the given streams, so tests can drive it in-process.
//
// Exit codes: 0 success / FOUND / verification pass, 1 UNSAT / UNKNOWN /
// verification failure, 2 input error.

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grunbaum.hpp"

namespace grunbaum::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNoAnswer = 1;
inline constexpr int kExitInput = 2;

namespace detail {

inline std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + std::to_string(xs[i]);
  return out;
}

/// "u,v" -> pair; ParseError otherwise.
inline std::pair<long, long> parse_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorCode::ParseError, std::string(what) + " must look like 'a,b'");
  return {grunbaum::detail::parse_int(s.substr(0, comma), 0), grunbaum::detail::parse_int(s.substr(comma + 1), 0)};
}

inline Budget make_budget(long long nodes, double seconds) {
  Budget b = Budget::from_environment();
  if (nodes > 0) b.nodes = static_cast<std::uint64_t>(nodes);
  if (seconds > 0) b.time = std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
  return b;
}

/// Writes to `path`, or to `out` when the path is empty or "-".
inline void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_file(path, content);
}

inline void print_verification(const VerificationReport& r, std::ostream& out) {
  out << (r.pass ? "pass" : "fail") << " coverage: " << r.colored_edges << "/" << r.total_edges << " edges, "
      << r.checked_triangles << "/" << r.total_triangles << " triangles checked\n";
  for (const auto& v : r.violations) {
    std::vector<int> cs(v.colors.begin(), v.colors.end());
    out << "  face " << v.face << ": colors " << join(cs) << "\n";
  }
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grünbaum edge colorings of sphere and torus triangulations", "grunbaum"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  // faces
  std::string faces_file;
  auto* faces_cmd = app.add_subcommand("faces", "Face census, genus and triangulation flag of an .emb file");
  faces_cmd->add_option("file", faces_file, ".emb file")->required();
  faces_cmd->add_flag("--json", json);

  // solve
  std::string solve_file, method = "auto", out_file, fixed_file, report_file;
  long long budget_nodes = 0;
  double time_limit = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  auto* solve_cmd = app.add_subcommand("solve", "Find a Grünbaum coloring");
  solve_cmd->add_option("file", solve_file, ".emb file")->required();
  solve_cmd->add_option("--method", method, "auto | pipeline | exact")
      ->check(CLI::IsMember({"auto", "pipeline", "exact"}));
  solve_cmd->add_option("--budget", budget_nodes, "Node budget (default 10^7, or GRUNBAUM_BUDGET)");
  solve_cmd->add_option("--time-limit", time_limit, "Wall-clock limit in seconds (default 30)");
  solve_cmd->add_option("--seed", seed, "Random seed (the solver is deterministic; recorded only)");
  solve_cmd->add_option("--threads", threads, "Threads for the exact search")->check(CLI::Range(1, 256));
  solve_cmd->add_option("--fixed", fixed_file, ".gcol with pre-colored edges (exact method)");
  solve_cmd->add_option("--out", out_file, "Write the coloring as .gcol");
  solve_cmd->add_option("--report", report_file, "Write the JSON report to a file");
  solve_cmd->add_flag("--json", json);

  // verify
  std::string verify_emb, verify_gcol;
  auto* verify_cmd = app.add_subcommand("verify", "Check a (partial) coloring");
  verify_cmd->add_option("emb", verify_emb, ".emb file")->required();
  verify_cmd->add_option("gcol", verify_gcol, ".gcol file")->required();
  verify_cmd->add_flag("--json", json);

  // gen
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate embeddings");
  gen_cmd->require_subcommand(1);
  gen_cmd->add_option("--out", gen_out, "Output .emb (default stdout)");
  int rows = 0, cols = 0, twist = 0;
  auto* gen_alt = gen_cmd->add_subcommand("altshuler", "6-regular torus grid T(r,c,s)");
  gen_alt->add_option("rows", rows)->required();
  gen_alt->add_option("cols", cols)->required();
  gen_alt->add_option("twist", twist)->required();
  gen_alt->add_option("--out", gen_out);
  std::string variant;
  auto* gen_k6_cmd = gen_cmd->add_subcommand("k6", "Torus embeddings of K6: 444A, 444B, 54, 6");
  gen_k6_cmd->add_option("variant", variant)->required();
  gen_k6_cmd->add_option("--out", gen_out);
  std::string named;
  auto* gen_named_cmd = gen_cmd->add_subcommand("named", "H7+K2, C3+C5, C11^3, K7, octahedron, icosahedron");
  gen_named_cmd->add_option("name", named)->required();
  gen_named_cmd->add_option("--out", gen_out);
  std::string refine_file;
  int steps = 1;
  bool fill = false;
  gen_cmd->add_flag("--fill", fill, "Triangulate non-triangular faces with two-vertex splits");
  for (auto* sub : {gen_k6_cmd, gen_named_cmd}) sub->add_flag("--fill", fill);
  auto* gen_refine = gen_cmd->add_subcommand("refine", "Random stellations of a triangulation");
  gen_refine->add_option("file", refine_file, ".emb file")->required();
  gen_refine->add_option("--steps", steps, "Number of stellations")->check(CLI::NonNegativeNumber);
  gen_refine->add_option("--seed", seed, "Random seed (default 0)");
  gen_refine->add_option("--out", gen_out);

  // chromatic
  std::string chromatic_file;
  auto* chromatic_cmd = app.add_subcommand("chromatic", "Chromatic number of the embedded graph");
  chromatic_cmd->add_option("file", chromatic_file, ".emb file")->required();
  chromatic_cmd->add_option("--budget", budget_nodes, "Node budget");
  chromatic_cmd->add_flag("--json", json);

  // kempe
  std::string kempe_emb, kempe_gcol, kempe_edge, kempe_colors, kempe_out;
  auto* kempe_cmd = app.add_subcommand("kempe", "Swap two colors along a Kempe chain");
  kempe_cmd->add_option("emb", kempe_emb, ".emb file")->required();
  kempe_cmd->add_option("gcol", kempe_gcol, ".gcol file")->required();
  kempe_cmd->add_option("--edge", kempe_edge, "Seed edge u,v")->required();
  kempe_cmd->add_option("--colors", kempe_colors, "Colors a,b")->required();
  kempe_cmd->add_option("--out", kempe_out, "Output .gcol (default stdout)");

  // catalog
  std::string export_dir;
  auto* catalog_cmd = app.add_subcommand("catalog", "Catalog embeddings, figure colorings and case tables");
  catalog_cmd->require_subcommand(1);
  auto* catalog_export = catalog_cmd->add_subcommand("export", "Write .emb/.gcol files and manifest.json");
  catalog_export->add_option("dir", export_dir, "Output directory")->required();
  auto* catalog_list = catalog_cmd->add_subcommand("list", "List figure colorings and their signatures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (*faces_cmd) {
      const Embedding e = load_emb(faces_file);
      const FaceSet faces = trace_faces(e);
      const int g = genus(e, faces);
      const bool tri = is_triangulation(faces);
      if (json) {
        out << Json{{"V", e.num_vertices()}, {"E", e.num_edges()}, {"faces", faces.census()},
                    {"genus", g}, {"triangulation", tri}}.dump()
            << "\n";
      } else {
        out << "faces: " << detail::join(faces.census()) << " genus: " << g
            << " triangulation: " << (tri ? "yes" : "no") << "\n";
      }
      return kExitOk;
    }

    if (*solve_cmd) {
      const Embedding e = load_emb(solve_file);
      SolveOptions options;
      options.budget = detail::make_budget(budget_nodes, time_limit);
      options.threads = threads;
      const bool has_fixed = !fixed_file.empty();
      if (has_fixed && method == "pipeline")
        fail(ErrorCode::PreconditionViolation, "--fixed needs --method exact (or auto)");
      SolveReport report;
      if (method == "exact" || has_fixed) {
        const PartialColoring fixed = has_fixed ? load_gcol(fixed_file, e) : PartialColoring(e.num_edges());
        report = solve_with_exact(e, fixed, options);
      } else {
        report = solve(e, options);
      }
      if (report.status == SolveStatus::Found) {
        // Re-verify before anything is written.
        if (!verify_grunbaum(e, *report.coloring).pass)
          throw std::logic_error("solver returned a coloring that fails verification");
        if (!out_file.empty()) write_file(out_file, write_gcol(e, report.coloring->colors));
      }
      const Json j = report_json(e, report);
      if (!report_file.empty()) write_file(report_file, j.dump(2) + "\n");
      if (json) {
        out << j.dump() << "\n";
      } else {
        out << to_string(report.status) << " method: " << report.method << " nodes: " << report.nodes
            << " millis: " << report.millis << "\n";
        for (const auto& line : report.trace) out << "  " << line << "\n";
      }
      return report.status == SolveStatus::Found ? kExitOk : kExitNoAnswer;
    }

    if (*verify_cmd) {
      const Embedding e = load_emb(verify_emb);
      const PartialColoring c = load_gcol(verify_gcol, e);
      const VerificationReport r = verify_partial(e, c);
      if (json)
        out << verification_json(r).dump() << "\n";
      else
        detail::print_verification(r, out);
      return r.pass ? kExitOk : kExitNoAnswer;
    }

    if (*gen_cmd) {
      Embedding e;
      if (*gen_alt) {
        e = gen_altshuler(rows, cols, twist).embedding;
      } else if (*gen_k6_cmd) {
        e = gen_k6(parse_k6_variant(variant)).embedding;
      } else if (*gen_named_cmd) {
        e = gen_named(named);
      } else {
        e = random_refinement(load_emb(refine_file), steps, seed);
      }
      if (fill) e = split_fill_faces(e);
      detail::emit(gen_out, write_emb(e), out);
      return kExitOk;
    }

    if (*chromatic_cmd) {
      const Embedding e = load_emb(chromatic_file);
      const ChromaticResult r = chromatic_number_with_witness(e.graph(), detail::make_budget(budget_nodes, 0));
      if (json) {
        std::vector<int> clique(r.clique.begin(), r.clique.end());
        out << Json{{"chromatic_number", r.chromatic_number}, {"clique", clique}, {"coloring", r.coloring},
                    {"nodes", r.nodes}}.dump()
            << "\n";
      } else {
        out << r.chromatic_number << "\n";
      }
      return kExitOk;
    }

    if (*kempe_cmd) {
      const Embedding e = load_emb(kempe_emb);
      const PartialColoring c = load_gcol(kempe_gcol, e);
      const auto [u, v] = detail::parse_pair(kempe_edge, "--edge");
      const auto [a, b] = detail::parse_pair(kempe_colors, "--colors");
      if (a < 0 || a >= kNumColors || b < 0 || b >= kNumColors)
        fail(ErrorCode::InvalidColor, "--colors must be two of 0,1,2");
      const auto seed_edge = e.find_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!seed_edge) fail(ErrorCode::UnknownId, "no edge " + kempe_edge);
      const PartialColoring changed = kempe_change(e, c, *seed_edge, static_cast<Color>(a), static_cast<Color>(b));
      detail::emit(kempe_out, write_gcol(e, changed.colors), out);
      return kExitOk;
    }

    if (*catalog_cmd) {
      if (*catalog_list) {
        for (const auto& fig : figure_colorings())
          out << fig.id << " " << fig.embedding.id << " " << figure_signature(fig) << "\n";
        return kExitOk;
      }
      namespace fs = std::filesystem;
      for (const auto& f : catalog_files()) {
        const fs::path path = fs::path(export_dir) / f.path;
        fs::create_directories(path.parent_path());
        write_file(path.string(), f.content);
      }
      out << "wrote " << catalog_files().size() << " files to " << export_dir << "\n";
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::BudgetExceeded:
      case ErrorCode::NoTableEntry:
      case ErrorCode::ClassificationAnomaly: return kExitNoAnswer;
      default: return kExitInput;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitNoAnswer;
  }
  return kExitInput;
}

}  // namespace grunbaum::cli
