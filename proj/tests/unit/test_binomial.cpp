#include <doctest.h>

#include <thread>
#include <vector>

#include <chowcount/binomial.hpp>
#include <chowcount/errors.hpp>
#include <chowcount/series.hpp>

#include "oracles.hpp"

using namespace chowcount;

TEST_CASE("binomial: small values and out-of-range k") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK_THROWS_AS(binomial(-1, 0), ParameterError);
}

TEST_CASE("binomial: matches an independent Pascal triangle up to n = 64") {
  for (int n = 0; n <= 64; ++n)
    for (int k = 0; k <= n; ++k)
      REQUIRE(binomial(n, k) == oracle::pascal(n, k));
}

TEST_CASE("binomial: Pascal rule and symmetry for n <= 64") {
  for (int n = 1; n <= 64; ++n) {
    for (int k = 1; k < n; ++k)
      REQUIRE(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    for (int k = 0; k <= n; ++k)
      REQUIRE(binomial(n, k) == binomial(n, n - k));
  }
}

TEST_CASE("binomial: Vandermonde convolution for m, n, r <= 16") {
  for (int m = 0; m <= 16; ++m)
    for (int n = 0; n <= 16; ++n)
      for (int r = 0; r <= 16; ++r) {
        ExactInt sum = 0;
        for (int i = 0; i <= r; ++i)
          sum += binomial(m, i) * binomial(n, r - i);
        REQUIRE(sum == binomial(m + n, r));
      }
}

TEST_CASE("binomial: beyond the cache bound stays exact") {
  const auto bound = shared_binomial_table().soft_bound();
  // C(2b, 2) = b(2b-1) and C(n, n-1) = n.
  CHECK(binomial(2 * bound, 2) == ExactInt{bound} * (2 * bound - 1));
  CHECK(binomial(2 * bound, 2 * bound - 1) == 2 * bound);
  CHECK(binomial(ExactInt{2 * bound}, 2 * bound - 1) == 2 * bound);

  // C(1000, 500) has 300 digits: compare against the table grown that far.
  BinomialTable big(1000);
  CHECK(binomial(1000, 500) == big(1000, 500));
  CHECK(to_decimal(binomial(1000, 500)).size() == 300);

  // Upper arguments wider than 64 bits.
  const ExactInt huge = ExactInt{1} << 100;
  CHECK(binomial(huge, 1) == huge);
  CHECK(binomial(huge, 2) == huge * (huge - 1) / 2);
}

TEST_CASE("binomial_signed: examples") {
  CHECK(binomial_signed(0, 3) == 0);
  CHECK(binomial_signed(0, 0) == 1);
  CHECK(binomial_signed(-2, 2) == 1);
  CHECK(binomial_signed(-2, 1) == -2);
  CHECK(binomial_signed(-2, 3) == 0);
  CHECK(binomial_signed(5, 2) == binomial(6, 2));
  CHECK_THROWS_AS(binomial_signed(3, -1), ParameterError);
}

TEST_CASE("binomial_signed: equals the expanded (1-t)^(-a) coefficient for a in [-8, 8], k <= 16") {
  for (int a = -8; a <= 8; ++a)
    for (int k = 0; k <= 16; ++k) {
      INFO("a=" << a << " k=" << k);
      REQUIRE(binomial_signed(a, k) == oracle::signed_coefficient(a, k));
    }
}

TEST_CASE("binomial_signed: agrees with the series module's explicit products") {
  // For a <= 0 multiply |a| copies of (1 - t) through series_mul.
  for (int a = -8; a <= 0; ++a) {
    std::vector<ExactInt> one_minus_t(17, ExactInt{0});
    one_minus_t[0] = 1;
    one_minus_t[1] = -1;
    std::vector<ExactInt> unit(17, ExactInt{0});
    unit[0] = 1;
    TruncatedSeries product(unit);
    for (int i = 0; i < -a; ++i)
      product = series_mul(product, TruncatedSeries(one_minus_t));
    for (int k = 0; k <= 16; ++k)
      REQUIRE(binomial_signed(a, k) == product.coefficient(k));
  }
}

TEST_CASE("BinomialTable: grows on demand and tolerates concurrent readers") {
  BinomialTable table(200);
  CHECK(table.cached_rows() == 0);
  CHECK(table(10, 3) == 120);
  CHECK(table.cached_rows() == 11);
  CHECK(table(5, 2) == 10);
  CHECK(table.cached_rows() == 11);

  std::vector<std::thread> workers;
  std::vector<int> bad(8, 0);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&, t] {
      for (int n = 200; n >= 0; n -= 1 + t)
        for (int k = 0; k <= n; k += 7)
          if (table(n, k) != table(n, n - k))
            ++bad[static_cast<std::size_t>(t)];
    });
  for (auto &w : workers)
    w.join();
  for (int b : bad)
    CHECK(b == 0);
  CHECK(table.cached_rows() == 201);
  CHECK(table(60, 30) == oracle::pascal(60, 30));
}
