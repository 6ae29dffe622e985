#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <chowcount/exact_int.hpp>

namespace chowcount {

/// Power series c_0 + c_1 t + ... + c_N t^N carried modulo t^(N+1).
///
/// The truncation order N is part of the value: two series compare equal
/// only at equal order, and arithmetic on mismatched orders throws
/// OrderMismatchError instead of re-truncating.
class TruncatedSeries {
public:
  /// Zero series of the given order.
  explicit TruncatedSeries(std::int64_t order);

  /// Series whose order is coeffs.size() - 1. Throws on an empty vector.
  explicit TruncatedSeries(std::vector<ExactInt> coeffs);

  std::int64_t order() const noexcept {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }

  /// Throws std::out_of_range when d > order() or d < 0.
  const ExactInt &coefficient(std::int64_t d) const;

  std::span<const ExactInt> coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<ExactInt> coeffs_;
};

/// (1/(1 - t))^m to the given order; coefficient of t^d is C(m+d-1, d).
TruncatedSeries series_geom_pow(std::int64_t m, std::int64_t order);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b);

inline TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b) {
  return series_mul(a, b);
}

inline const ExactInt &series_coefficient(const TruncatedSeries &s, std::int64_t d) {
  return s.coefficient(d);
}

} // namespace chowcount
