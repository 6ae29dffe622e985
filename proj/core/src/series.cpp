#include <chowcount/series.hpp>

#include <stdexcept>
#include <string>

#include <chowcount/binomial.hpp>
#include <chowcount/errors.hpp>

namespace chowcount {

TruncatedSeries::TruncatedSeries(std::int64_t order) {
  if (order < 0)
    throw ParameterError("series order must be nonnegative, got " + std::to_string(order));
  coeffs_.assign(static_cast<std::size_t>(order) + 1, ExactInt{0});
}

TruncatedSeries::TruncatedSeries(std::vector<ExactInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty())
    throw ParameterError("series needs at least the constant coefficient");
}

const ExactInt &TruncatedSeries::coefficient(std::int64_t d) const {
  if (d < 0 || d > order())
    throw std::out_of_range("coefficient t^" + std::to_string(d) +
                            " is outside series of order " + std::to_string(order()));
  return coeffs_[static_cast<std::size_t>(d)];
}

TruncatedSeries series_geom_pow(std::int64_t m, std::int64_t order) {
  if (m < 0)
    throw ParameterError("series_geom_pow: exponent must be nonnegative, got " +
                         std::to_string(m));
  std::vector<ExactInt> coeffs;
  if (order >= 0)
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
  for (std::int64_t d = 0; d <= order; ++d)
    coeffs.push_back(binomial_signed(m, d));
  if (coeffs.empty())
    return TruncatedSeries(order); // throws with the order message
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries series_mul(const TruncatedSeries &a, const TruncatedSeries &b) {
  if (a.order() != b.order())
    throw OrderMismatchError("series_mul: order " + std::to_string(a.order()) +
                             " does not match order " + std::to_string(b.order()));
  const auto lhs = a.coefficients();
  const auto rhs = b.coefficients();
  std::vector<ExactInt> out(lhs.size(), ExactInt{0});
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs[i] == 0)
      continue;
    for (std::size_t j = 0; i + j < out.size(); ++j)
      out[i + j] += lhs[i] * rhs[j];
  }
  return TruncatedSeries(std::move(out));
}

} // namespace chowcount
