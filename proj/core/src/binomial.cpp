#include <chowcount/binomial.hpp>

#include <algorithm>
#include <mutex>
#include <string>

#include <chowcount/errors.hpp>

namespace chowcount {

namespace {

ExactInt multiplicative_binomial(const ExactInt &n, std::int64_t k) {
  // Each partial product is itself a binomial, so the division is exact.
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace

BinomialTable::BinomialTable(std::int64_t soft_bound)
    : soft_bound_(std::max<std::int64_t>(soft_bound, 0)) {}

std::size_t BinomialTable::cached_rows() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

void BinomialTable::grow_to(std::int64_t n) const {
  std::unique_lock lock(mutex_);
  while (static_cast<std::int64_t>(rows_.size()) <= n) {
    const auto row_index = rows_.size();
    std::vector<ExactInt> row(row_index + 1, ExactInt{1});
    if (row_index > 0) {
      const auto &prev = rows_.back();
      for (std::size_t k = 1; k < row_index; ++k)
        row[k] = prev[k - 1] + prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

ExactInt BinomialTable::operator()(std::int64_t n, std::int64_t k) const {
  if (n < 0)
    throw ParameterError("binomial: upper argument must be nonnegative, got " +
                         std::to_string(n));
  if (k < 0 || k > n)
    return 0;
  if (n > soft_bound_)
    return multiplicative_binomial(ExactInt{n}, std::min(k, n - k));
  {
    std::shared_lock lock(mutex_);
    if (static_cast<std::int64_t>(rows_.size()) > n)
      return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }
  grow_to(n);
  std::shared_lock lock(mutex_);
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BinomialTable &shared_binomial_table() {
  static BinomialTable table;
  return table;
}

ExactInt binomial(std::int64_t n, std::int64_t k) {
  return shared_binomial_table()(n, k);
}

ExactInt binomial(const ExactInt &n, std::int64_t k) {
  if (n < 0)
    throw ParameterError("binomial: upper argument must be nonnegative, got " +
                         to_decimal(n));
  if (k < 0 || k > n)
    return 0;
  if (n <= shared_binomial_table().soft_bound())
    return binomial(n.convert_to<std::int64_t>(), k);
  const ExactInt complement = n - k;
  if (complement < k)
    return multiplicative_binomial(n, complement.convert_to<std::int64_t>());
  return multiplicative_binomial(n, k);
}

ExactInt binomial_signed(const ExactInt &a, std::int64_t k) {
  if (k < 0)
    throw ParameterError("binomial_signed: k must be nonnegative, got " +
                         std::to_string(k));
  if (a > 0)
    return binomial(ExactInt{a + k - 1}, k);
  // Rising factorial a(a+1)...(a+k-1) / k!; the partial quotients are
  // generalized binomials and stay integral.
  ExactInt result = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    result *= a + i;
    result /= i + 1;
  }
  return result;
}

ExactInt binomial_signed(std::int64_t a, std::int64_t k) {
  return binomial_signed(ExactInt{a}, k);
}

} // namespace chowcount
