#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <thread>
#include <vector>

#include "grunbaum/budget.hpp"
#include "grunbaum/coloring.hpp"

namespace grunbaum {

enum class SolveStatus { Found, Unsat, Unknown };

inline constexpr std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Found: return "FOUND";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::Unknown: return "UNKNOWN";
  }
  return "?";
}

enum class ExactMode { Find, Count, Enumerate };

struct ExactOptions {
  Budget budget{};
  /// Faces excluded from the rainbow constraint (a disk's outer face).
  std::vector<FaceId> exempt_faces;
  /// Root of the breadth-first edge order (a disk's outer face puts the
  /// fixed boundary first).
  FaceId start_face = 0;
  int threads = 1;
};

struct ExactResult {
  SolveStatus status = SolveStatus::Unknown;
  std::optional<EdgeColoring> coloring;  // first solution (Find / Enumerate)
  std::uint64_t solutions = 0;           // exact for Count when not Unknown
  std::uint64_t nodes = 0;
  double millis = 0;
};

/// Receives each complete coloring; return false to stop the enumeration.
using SolutionSink = std::function<bool(std::span<const Color>)>;

namespace detail {

/// Backtracking over edges in a static order; every constrained (triangular,
/// non-exempt) face must end up with three distinct colors.
class EdgeColoringSearch {
 public:
  EdgeColoringSearch(const Embedding& e, const FaceSet& faces, const PartialColoring& fixed,
                     std::span<const FaceId> exempt, FaceId start_face = 0)
      : fixed_(fixed.colors), face_edges_of_(e.num_edges()) {
    std::vector<char> is_exempt(faces.size(), 0);
    for (FaceId f : exempt) is_exempt[f] = 1;
    for (FaceId f = 0; f < faces.size(); ++f) {
      if (faces.face_size(f) != 3 || is_exempt[f]) continue;
      const auto edges = faces.edges(f);
      constrained_.push_back({edges[0], edges[1], edges[2]});
    }
    for (const auto& tri : constrained_)
      for (int i = 0; i < 3; ++i) face_edges_of_[tri[i]].push_back({tri[(i + 1) % 3], tri[(i + 2) % 3]});

    // Faces breadth-first over the dual from the start face; edges of a face in id order.
    std::vector<char> face_seen(faces.size(), 0), edge_seen(e.num_edges(), 0);
    std::vector<FaceId> queue;
    if (faces.size() > 0) {
      if (start_face < 0 || start_face >= faces.size()) start_face = 0;
      queue.push_back(start_face);
      face_seen[start_face] = 1;
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto edges = faces.edges(queue[i]);
      std::sort(edges.begin(), edges.end());
      for (EdgeId x : edges) {
        if (!edge_seen[x]) {
          edge_seen[x] = 1;
          if (fixed_[x] == kNoColor) order_.push_back(x);
        }
        for (DartId d : {2 * x, 2 * x + 1}) {
          FaceId g = faces.face_of_dart[d];
          if (!face_seen[g]) {
            face_seen[g] = 1;
            queue.push_back(g);
          }
        }
      }
    }
    for (EdgeId x = 0; x < e.num_edges(); ++x)
      if (!edge_seen[x] && fixed_[x] == kNoColor) order_.push_back(x);
  }

  bool fixed_consistent() const {
    for (const auto& tri : constrained_) {
      const Color a = fixed_[tri[0]], b = fixed_[tri[1]], c = fixed_[tri[2]];
      if ((a != kNoColor && a == b) || (b != kNoColor && b == c) || (a != kNoColor && a == c)) return false;
    }
    return true;
  }

  std::size_t depth() const { return order_.size(); }

  /// Valid assignments of the first `prefix_len` ordered edges.
  std::vector<std::vector<Color>> prefixes(std::size_t prefix_len) const {
    std::vector<std::vector<Color>> out;
    std::vector<Color> work = fixed_;
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == prefix_len) {
        out.push_back(work);
        return;
      }
      const EdgeId x = order_[pos];
      for (Color c = 0; c < kNumColors; ++c)
        if (allowed(work, x, c)) {
          work[x] = c;
          rec(pos + 1);
          work[x] = kNoColor;
        }
    };
    rec(0);
    return out;
  }

  /// Returns false when the search was stopped (budget or sink).
  bool run(std::vector<Color> work, std::size_t start, BudgetMeter& meter, const std::atomic<bool>& stop,
           const std::function<bool(std::span<const Color>)>& on_solution) const {
    return descend(work, start, meter, stop, on_solution);
  }

 private:
  bool allowed(const std::vector<Color>& work, EdgeId x, Color c) const {
    for (const auto& [y, z] : face_edges_of_[x])
      if (work[y] == c || work[z] == c) return false;
    return true;
  }

  bool descend(std::vector<Color>& work, std::size_t pos, BudgetMeter& meter, const std::atomic<bool>& stop,
               const std::function<bool(std::span<const Color>)>& on_solution) const {
    if (stop.load(std::memory_order_relaxed)) return false;
    if (pos == order_.size()) return on_solution(work);
    const EdgeId x = order_[pos];
    for (Color c = 0; c < kNumColors; ++c) {
      if (!meter.tick()) return false;
      if (!allowed(work, x, c)) continue;
      work[x] = c;
      const bool go_on = descend(work, pos + 1, meter, stop, on_solution);
      work[x] = kNoColor;
      if (!go_on) return false;
    }
    return true;
  }

  std::vector<Color> fixed_;
  std::vector<std::array<EdgeId, 3>> constrained_;
  std::vector<std::vector<std::pair<EdgeId, EdgeId>>> face_edges_of_;
  std::vector<EdgeId> order_;
};

}  // namespace detail

/// Exhaustive Grünbaum-coloring search with fixed edges. UNSAT is reported
/// only after the whole tree has been explored; a spent budget gives UNKNOWN.
inline ExactResult solve_exact(const Embedding& e, const FaceSet& faces, const PartialColoring& fixed, ExactMode mode,
                               const ExactOptions& options = {}, const SolutionSink& sink = {}) {
  if (fixed.size() != e.num_edges()) fail(ErrorCode::PreconditionViolation, "fixed coloring size mismatch");
  detail::EdgeColoringSearch search(e, faces, fixed, options.exempt_faces, options.start_face);
  BudgetMeter meter(options.budget);
  ExactResult result;
  if (!search.fixed_consistent()) {
    result.status = SolveStatus::Unsat;
    return result;
  }

  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> solutions{0};
  std::mutex mutex;
  bool sink_stopped = false;
  auto on_solution = [&](std::span<const Color> colors) -> bool {
    solutions.fetch_add(1, std::memory_order_relaxed);
    if (mode == ExactMode::Count) return true;
    std::lock_guard lock(mutex);
    if (stop.load()) return false;
    if (!result.coloring) result.coloring = EdgeColoring(std::vector<Color>(colors.begin(), colors.end()));
    if (mode == ExactMode::Find) {
      stop.store(true);
      return false;
    }
    if (sink && !sink(colors)) {
      sink_stopped = true;
      stop.store(true);
      return false;
    }
    return true;
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    search.run(fixed.colors, 0, meter, stop, on_solution);
  } else {
    std::size_t prefix_len = 0;
    std::vector<std::vector<Color>> work_items{fixed.colors};
    while (prefix_len < search.depth() && work_items.size() < static_cast<std::size_t>(8 * threads)) {
      ++prefix_len;
      work_items = search.prefixes(prefix_len);
      if (work_items.empty()) break;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < work_items.size() && !stop.load(); i = next.fetch_add(1))
          if (!search.run(work_items[i], prefix_len, meter, stop, on_solution) && !stop.load()) return;
      });
    for (auto& th : pool) th.join();
  }

  result.solutions = solutions.load();
  result.nodes = meter.nodes();
  result.millis = meter.millis();
  if (result.coloring && (mode != ExactMode::Count)) {
    result.status = SolveStatus::Found;
  } else if (meter.exhausted()) {
    result.status = SolveStatus::Unknown;
  } else if (sink_stopped) {
    result.status = SolveStatus::Found;
  } else {
    result.status = result.solutions > 0 ? SolveStatus::Found : SolveStatus::Unsat;
  }
  if (mode == ExactMode::Enumerate && meter.exhausted()) result.status = SolveStatus::Unknown;
  return result;
}

inline ExactResult solve_exact(const Embedding& e, const PartialColoring& fixed, ExactMode mode,
                               const ExactOptions& options = {}, const SolutionSink& sink = {}) {
  return solve_exact(e, trace_faces(e), fixed, mode, options, sink);
}

inline ExactResult solve_exact(const Embedding& e, ExactMode mode = ExactMode::Find, const ExactOptions& options = {}) {
  return solve_exact(e, PartialColoring(e.num_edges()), mode, options);
}

}  // namespace grunbaum
