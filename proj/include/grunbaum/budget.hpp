#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "grunbaum/error.hpp"

namespace grunbaum {

/// Node and wall-clock limits for one search.
struct Budget {
  std::uint64_t nodes = 10'000'000;
  std::chrono::milliseconds time{30'000};

  /// GRUNBAUM_BUDGET=<nodes> overrides the node limit.
  static Budget from_environment(Budget base) {
    if (const char* env = std::getenv("GRUNBAUM_BUDGET")) {
      try {
        base.nodes = std::stoull(env);
      } catch (const std::exception&) {
        fail(ErrorCode::ParseError, std::string("GRUNBAUM_BUDGET is not a number: ") + env);
      }
    }
    return base;
  }
  static Budget from_environment() { return from_environment(Budget{}); }
};

/// Shared counter enforcing a Budget; safe to tick from several threads.
class BudgetMeter {
 public:
  explicit BudgetMeter(Budget budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()), deadline_(start_ + budget.time) {}

  /// Counts one node; returns false once the budget is exhausted.
  bool tick() {
    const std::uint64_t n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (n > budget_.nodes) {
      exhausted_.store(true, std::memory_order_relaxed);
      return false;
    }
    if ((n & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) exhausted_.store(true, std::memory_order_relaxed);
    return !exhausted_.load(std::memory_order_relaxed);
  }

  bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return std::min<std::uint64_t>(nodes_.load(std::memory_order_relaxed), budget_.nodes); }
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> exhausted_{false};
};

}  // namespace grunbaum
