#include <chowcount/chow.hpp>

#include <mutex>
#include <string>

#include <chowcount/binomial.hpp>
#include <chowcount/errors.hpp>

namespace chowcount {

namespace {

std::string triple(std::int64_t p, std::int64_t n, std::int64_t d) {
  return "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")";
}

void require_plane(std::int64_t p, std::int64_t n, const char *who) {
  if (p < 0 || p > n)
    throw ParameterError(std::string(who) + ": need 0 <= p <= n, got p=" + std::to_string(p) +
                         ", n=" + std::to_string(n));
}

TruncatedSeries geometric_series(std::int64_t order) {
  return TruncatedSeries(std::vector<ExactInt>(static_cast<std::size_t>(order) + 1, ExactInt{1}));
}

class FunctionalSeriesBuilder {
public:
  explicit FunctionalSeriesBuilder(std::int64_t order) : ones_(geometric_series(order)) {}

  TruncatedSeries build(std::int64_t p, std::int64_t n) {
    if (auto it = cache_.find({p, n}); it != cache_.end())
      return it->second;
    TruncatedSeries result = ones_;
    if (p == n) {
      // Q_{q,q} = 1/(1-t)
    } else if (p == 0) {
      for (std::int64_t i = 0; i < n; ++i)
        result = result * ones_;
    } else {
      result = build(p, n - 1) * build(p - 1, n - 1);
    }
    cache_.emplace(std::pair{p, n}, result);
    return result;
  }

private:
  TruncatedSeries ones_;
  std::map<std::pair<std::int64_t, std::int64_t>, TruncatedSeries> cache_;
};

} // namespace

ChowParams::ChowParams(std::int64_t p, std::int64_t n, std::int64_t d) : p_(p), n_(n), d_(d) {
  if (p < 0 || p > n || d < 0)
    throw ParameterError("invalid Chow parameters " + triple(p, n, d) +
                         ": need 0 <= p <= n and d >= 0");
}

std::string_view to_string(EulerMethod method) noexcept {
  switch (method) {
  case EulerMethod::closed:
    return "closed";
  case EulerMethod::recursive:
    return "recursive";
  case EulerMethod::series:
    return "series";
  }
  return "unknown";
}

std::string_view to_string(SeriesMethod method) noexcept {
  switch (method) {
  case SeriesMethod::closed:
    return "closed";
  case SeriesMethod::functional:
    return "functional";
  }
  return "unknown";
}

ExactInt v_pn(std::int64_t p, std::int64_t n) {
  require_plane(p, n, "v_pn");
  return binomial(n + 1, p + 1);
}

EulerValue chow_euler_closed(const ChowParams &params) {
  const ExactInt v = v_pn(params.p(), params.n());
  return {binomial(ExactInt{v + params.d() - 1}, params.d()), EulerMethod::closed};
}

EulerValue chow_euler_recursive(const ChowParams &params) {
  return {RecursionMemo::shared().lookup(params), EulerMethod::recursive};
}

ExactInt RecursionMemo::lookup(const ChowParams &params) {
  const Key key{params.p(), params.n()};
  const auto d = static_cast<std::size_t>(params.d());
  {
    std::shared_lock lock(mutex_);
    if (auto it = rows_.find(key); it != rows_.end() && it->second.size() > d)
      return it->second[d];
  }
  std::unique_lock lock(mutex_);
  return row_locked(params.p(), params.n(), params.d())[d];
}

std::size_t RecursionMemo::size() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

const std::vector<ExactInt> &RecursionMemo::row_locked(std::int64_t p, std::int64_t n,
                                                       std::int64_t max_d) {
  const Key key{p, n};
  const auto want = static_cast<std::size_t>(max_d) + 1;
  if (auto it = rows_.find(key); it != rows_.end() && it->second.size() >= want)
    return it->second;

  std::vector<ExactInt> row(want);
  row[0] = 1;
  if (p == n) {
    // P^p carries exactly one cycle of each degree.
    for (std::size_t d = 1; d < want; ++d)
      row[d] = 1;
  } else if (p == 0) {
    for (std::size_t d = 1; d < want; ++d)
      row[d] = binomial(n + static_cast<std::int64_t>(d), static_cast<std::int64_t>(d));
  } else {
    // chi(p, n, d) = chi(p-1, n-1, d) + sum_{i=1..d} chi(p, n-1, i) chi(p-1, n-1, d-i)
    const std::vector<ExactInt> same_dim = row_locked(p, n - 1, max_d);
    const std::vector<ExactInt> lower_dim = row_locked(p - 1, n - 1, max_d);
    for (std::size_t d = 1; d < want; ++d) {
      ExactInt chi = lower_dim[d];
      for (std::size_t i = 1; i <= d; ++i)
        chi += same_dim[i] * lower_dim[d - i];
      row[d] = std::move(chi);
    }
  }
  auto &slot = rows_[key];
  slot = std::move(row);
  return slot;
}

RecursionMemo &RecursionMemo::shared() {
  static RecursionMemo memo;
  return memo;
}

ExactInt points_euler_recursive(std::int64_t n, std::int64_t d) {
  if (n < 0 || d < 0)
    throw ParameterError("points_euler_recursive: need n >= 0 and d >= 0, got n=" +
                         std::to_string(n) + ", d=" + std::to_string(d));
  // row[i] = chi(C_{0,i}(P^k)); start at P^0 where every degree has one cycle.
  std::vector<ExactInt> row(static_cast<std::size_t>(d) + 1, ExactInt{1});
  for (std::int64_t k = 0; k < n; ++k) {
    std::vector<ExactInt> next(row.size());
    ExactInt running = 1;
    next[0] = 1;
    for (std::size_t i = 1; i < row.size(); ++i) {
      running += row[i];
      next[i] = running;
    }
    row = std::move(next);
  }
  return row.back();
}

TruncatedSeries chow_series(std::int64_t p, std::int64_t n, std::int64_t order,
                            SeriesMethod method) {
  require_plane(p, n, "chow_series");
  if (order < 0)
    throw ParameterError("chow_series: order must be nonnegative, got " + std::to_string(order));
  if (method == SeriesMethod::closed) {
    const ExactInt v = v_pn(p, n);
    std::vector<ExactInt> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    for (std::int64_t d = 0; d <= order; ++d)
      coeffs.push_back(binomial_signed(v, d));
    return TruncatedSeries(std::move(coeffs));
  }
  return FunctionalSeriesBuilder(order).build(p, n);
}

ExactInt divisor_check(std::int64_t p, std::int64_t d) {
  if (p < 0 || d < 0)
    throw ParameterError("divisor_check: need p >= 0 and d >= 0, got p=" + std::to_string(p) +
                         ", d=" + std::to_string(d));
  return binomial(p + d + 1, d);
}

} // namespace chowcount
