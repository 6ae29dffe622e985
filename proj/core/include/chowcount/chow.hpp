#pragma once

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <string_view>
#include <utility>
#include <vector>

#include <chowcount/exact_int.hpp>
#include <chowcount/series.hpp>

namespace chowcount {

/// Index (p, n, d) of the Chow variety C_{p,d}(P^n) of effective p-cycles
/// of degree d in complex projective n-space. Always satisfies
/// 0 <= p <= n and d >= 0.
class ChowParams {
public:
  /// Throws ParameterError unless 0 <= p <= n and d >= 0.
  ChowParams(std::int64_t p, std::int64_t n, std::int64_t d);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t d() const noexcept { return d_; }

  friend bool operator==(const ChowParams &, const ChowParams &) = default;

private:
  std::int64_t p_;
  std::int64_t n_;
  std::int64_t d_;
};

enum class EulerMethod { closed, recursive, series };

std::string_view to_string(EulerMethod method) noexcept;

struct EulerValue {
  ExactInt chi;
  EulerMethod method;
};

enum class SeriesMethod { closed, functional };

std::string_view to_string(SeriesMethod method) noexcept;

/// Count of Plucker coordinates of a p-plane in P^n,
/// C(n+1, p+1). Throws ParameterError unless 0 <= p <= n.
ExactInt v_pn(std::int64_t p, std::int64_t n);

/// Closed form C(v_pn + d - 1, d).
///
/// The same number is the l-adic Euler-Poincare characteristic of the Chow
/// variety over any algebraically closed field, so no separate entry point
/// exists for it.
EulerValue chow_euler_closed(const ChowParams &params);

/// Memoized suspension recursion
///   chi(p+1, n+1, d) = chi(p, n, d) + sum_{i=1..d} chi(p+1, n, i) chi(p, n, d-i)
/// seeded only with chi(q, N, 0) = 1, chi(0, n, d) = C(n+d, d) and
/// chi(p, p, d) = 1. Never consults the closed form.
EulerValue chow_euler_recursive(const ChowParams &params);

/// Euler characteristic of SP^d(P^n) computed by
///   chi(0, n+1, d) = 1 + sum_{i=1..d} chi(0, n, i),  chi(0, 0, d) = 1.
/// Independent of the binomial code. Throws unless n >= 0 and d >= 0.
ExactInt points_euler_recursive(std::int64_t n, std::int64_t d);

/// Generating function Q_{p,n}(t) = sum_d chi(C_{p,d}(P^n)) t^d.
///
/// `closed` expands (1/(1-t))^{v_pn}. `functional` uses only
/// Q_{p+1,n+1} = Q_{p+1,n} Q_{p,n}, Q_{0,m} = (1/(1-t))^{m+1} (as an
/// (m+1)-fold product of the geometric series) and Q_{q,q} = 1/(1-t).
TruncatedSeries chow_series(std::int64_t p, std::int64_t n, std::int64_t order,
                            SeriesMethod method);

/// Degree-d hypersurfaces in P^{p+1} form P^{C(p+d+1,d)-1}; returns
/// C(p+d+1, d). Throws unless p >= 0 and d >= 0.
ExactInt divisor_check(std::int64_t p, std::int64_t d);

/// Compute-once cache behind chow_euler_recursive.
///
/// Rows are keyed by (p, n) and hold chi(p, n, 0..D). A row is only ever
/// replaced by a longer row under the exclusive lock, so concurrent readers
/// observe either the old complete row or the new complete row.
class RecursionMemo {
public:
  ExactInt lookup(const ChowParams &params);

  std::size_t size() const;

  /// Process-wide instance used by chow_euler_recursive.
  static RecursionMemo &shared();

private:
  using Key = std::pair<std::int64_t, std::int64_t>;

  const std::vector<ExactInt> &row_locked(std::int64_t p, std::int64_t n, std::int64_t max_d);

  mutable std::shared_mutex mutex_;
  std::map<Key, std::vector<ExactInt>> rows_;
};

} // namespace chowcount
