#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <chowcount/chow.hpp>
#include <chowcount/exact_int.hpp>
#include <chowcount/invariant.hpp>
#include <chowcount/series.hpp>

namespace chowcount {

enum class Suite { recursion, series, quaternionic, base_cases, all };

std::string_view to_string(Suite suite) noexcept;
std::optional<Suite> parse_suite(std::string_view name) noexcept;

struct SweepBounds {
  std::int64_t max_p = 4;
  std::int64_t max_n = 6;
  std::int64_t max_d = 10;
  std::int64_t order = 12;
};

/// Every computation a sweep compares. Production code uses
/// PathSet::reference(); tests swap single entries to check that a wrong
/// path is reported.
struct PathSet {
  std::function<ExactInt(std::int64_t, std::int64_t)> binomial;
  std::function<ExactInt(const ChowParams &)> closed;
  std::function<ExactInt(const ChowParams &)> recursive;
  std::function<TruncatedSeries(std::int64_t, std::int64_t, std::int64_t, SeriesMethod)> series;
  std::function<ExactInt(std::int64_t, std::int64_t)> points;
  std::function<ExactInt(std::int64_t, std::int64_t)> divisor;
  std::function<ExactInt(const ChowParams &)> g_invariant;
  std::function<ExactInt(const QuaternionicParams &)> quaternionic;
  std::function<ExactInt(std::int64_t, std::int64_t)> quaternionic_p0;
  std::function<ExactInt(std::int64_t, std::int64_t)> quaternionic_d1;
  std::function<ExactInt(std::int64_t, std::int64_t)> sp;
  std::function<TruncatedSeries(std::int64_t, std::int64_t)> geom_pow;

  static PathSet reference();
};

struct VerificationFailure {
  std::string check;
  std::vector<std::pair<std::string, std::int64_t>> inputs;
  ExactInt expected;
  ExactInt actual;
};

struct VerificationReport {
  std::string suite;
  std::int64_t cases_run = 0;
  std::vector<VerificationFailure> failures;
  double elapsed_ms = 0.0;

  bool passed() const noexcept { return failures.empty(); }
};

/// Runs the selected consistency sweep(s). Throws ParameterError on a
/// negative bound.
VerificationReport run_verification(Suite suite, const SweepBounds &bounds,
                                    const PathSet &paths = PathSet::reference());

} // namespace chowcount
