#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <vector>

#include <chowcount/exact_int.hpp>

namespace chowcount {

/// Triangular cache of C(n, k).
///
/// Rows are added on demand up to `soft_bound()`; requests with a larger
/// upper argument are answered by the multiplicative formula and not cached.
/// Rows are published whole under an exclusive lock, so a reader never sees
/// a partially filled row.
class BinomialTable {
public:
  static constexpr std::int64_t kDefaultSoftBound = 512;

  explicit BinomialTable(std::int64_t soft_bound = kDefaultSoftBound);

  BinomialTable(const BinomialTable &) = delete;
  BinomialTable &operator=(const BinomialTable &) = delete;

  /// C(n, k) for n >= 0; zero when k < 0 or k > n.
  ExactInt operator()(std::int64_t n, std::int64_t k) const;

  std::int64_t soft_bound() const noexcept { return soft_bound_; }

  /// Number of rows currently cached (rows 0 .. cached_rows()-1).
  std::size_t cached_rows() const;

private:
  void grow_to(std::int64_t n) const;

  std::int64_t soft_bound_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<ExactInt>> rows_;
};

/// Process-wide table used by the free functions below.
BinomialTable &shared_binomial_table();

/// C(n, k); returns 0 for k outside [0, n]. Requires n >= 0.
ExactInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) with a big upper argument, by the multiplicative formula.
ExactInt binomial(const ExactInt &n, std::int64_t k);

/// Coefficient of t^k in (1 - t)^(-a), i.e. a(a+1)...(a+k-1)/k!.
/// Agrees with binomial(a + k - 1, k) for a > 0; equals 0 for a = 0, k > 0
/// and 1 for k = 0. Requires k >= 0.
ExactInt binomial_signed(std::int64_t a, std::int64_t k);
ExactInt binomial_signed(const ExactInt &a, std::int64_t k);

} // namespace chowcount
