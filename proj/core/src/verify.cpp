#include <chowcount/verify.hpp>

#include <algorithm>
#include <chrono>
#include <string>

#include <chowcount/binomial.hpp>
#include <chowcount/errors.hpp>

namespace chowcount {

namespace {

using Inputs = std::vector<std::pair<std::string, std::int64_t>>;

class Sweep {
public:
  Sweep(const SweepBounds &bounds, const PathSet &paths, VerificationReport &report)
      : b_(bounds), paths_(paths), report_(report) {}

  void recursion() {
    for (std::int64_t n = 0; n <= b_.max_n; ++n)
      for (std::int64_t p = 0; p <= std::min(b_.max_p, n); ++p)
        for (std::int64_t d = 0; d <= b_.max_d; ++d) {
          const ChowParams params(p, n, d);
          const ExactInt closed = paths_.closed(params);
          expect("closed-vs-recursive", {{"p", p}, {"n", n}, {"d", d}}, closed,
                 paths_.recursive(params));
          expect("closed-vs-g-invariant", {{"p", p}, {"n", n}, {"d", d}}, closed,
                 paths_.g_invariant(params));
        }
    // d = 1 collapses the recursion to Pascal's rule.
    for (std::int64_t n = 1; n <= b_.max_n; ++n)
      for (std::int64_t p = 0; p < n && p + 1 <= b_.max_p; ++p) {
        const ExactInt target = paths_.binomial(n + 2, p + 2);
        expect("pascal-d1-recursive", {{"p", p}, {"n", n}}, target,
               paths_.recursive(ChowParams(p + 1, n + 1, 1)));
        expect("pascal-d1-identity", {{"p", p}, {"n", n}}, target,
               paths_.binomial(n + 1, p + 1) + paths_.binomial(n + 1, p + 2));
      }
  }

  void series() {
    const std::int64_t order = b_.order;
    for (std::int64_t n = 0; n <= b_.max_n; ++n)
      for (std::int64_t p = 0; p <= std::min(b_.max_p, n); ++p) {
        const TruncatedSeries functional = paths_.series(p, n, order, SeriesMethod::functional);
        const TruncatedSeries closed = paths_.series(p, n, order, SeriesMethod::closed);
        for (std::int64_t d = 0; d <= order; ++d) {
          const Inputs at{{"p", p}, {"n", n}, {"d", d}};
          if (d <= b_.max_d)
            expect("closed-vs-functional-coefficient", at, paths_.closed(ChowParams(p, n, d)),
                   functional.coefficient(d));
          expect("series-closed-vs-functional", at, closed.coefficient(d),
                 functional.coefficient(d));
        }
      }
    for (std::int64_t n = 1; n <= b_.max_n; ++n)
      for (std::int64_t p = 0; p < n && p + 1 <= b_.max_p; ++p)
        for (const auto method : {SeriesMethod::closed, SeriesMethod::functional}) {
          const auto lhs = paths_.series(p + 1, n + 1, order, method);
          const auto rhs =
              paths_.series(p + 1, n, order, method) * paths_.series(p, n, order, method);
          expect_series(method == SeriesMethod::closed ? "factorization-closed"
                                                       : "factorization-functional",
                        {{"p", p}, {"n", n}}, lhs, rhs);
        }
    for (std::int64_t a = 0; a <= 16; ++a)
      for (std::int64_t b = 0; b <= 16; ++b)
        expect_series("geom-pow-additive", {{"a", a}, {"b", b}}, paths_.geom_pow(a + b, order),
                      paths_.geom_pow(a, order) * paths_.geom_pow(b, order));
  }

  void quaternionic() {
    for (std::int64_t qn = 1; qn <= b_.max_n; ++qn) {
      for (std::int64_t d = 0; d <= b_.max_d; ++d)
        expect("quaternionic-p0-oracle", {{"n", qn}, {"d", d}},
               paths_.quaternionic(QuaternionicParams(0, qn, d)),
               paths_.quaternionic_p0(qn, d));
      for (std::int64_t p = 0; p <= 2 * qn - 1; ++p) {
        const ExactInt target = paths_.binomial(2 * qn, p + 1);
        expect("quaternionic-d1-oracle", {{"p", p}, {"n", qn}}, target,
               paths_.quaternionic_d1(p, qn));
        expect("quaternionic-d1-closed", {{"p", p}, {"n", qn}}, target,
               paths_.quaternionic(QuaternionicParams(p, qn, 1)));
        for (std::int64_t d = 0; d <= b_.max_d; ++d)
          expect("quaternionic-vs-ambient", {{"p", p}, {"n", qn}, {"d", d}},
                 paths_.closed(ChowParams(p, 2 * qn - 1, d)),
                 paths_.quaternionic(QuaternionicParams(p, qn, d)));
      }
    }
  }

  void base_cases() {
    for (std::int64_t n = 0; n <= b_.max_n; ++n)
      for (std::int64_t d = 0; d <= b_.max_d; ++d) {
        expect("points-oracle", {{"n", n}, {"d", d}}, paths_.binomial(n + d, d),
               paths_.points(n, d));
        expect("degree-zero", {{"n", n}, {"d", d}}, 1,
               paths_.recursive(ChowParams(std::min(n, b_.max_p), n, 0)));
        expect("unique-cycle-closed", {{"p", n}, {"d", d}}, 1, paths_.closed(ChowParams(n, n, d)));
        expect("unique-cycle-recursive", {{"p", n}, {"d", d}}, 1,
               paths_.recursive(ChowParams(n, n, d)));
      }
    for (std::int64_t p = 0; p <= b_.max_p; ++p)
      for (std::int64_t d = 0; d <= b_.max_d; ++d) {
        const ExactInt divisor = paths_.divisor(p, d);
        expect("divisor-closed", {{"p", p}, {"d", d}}, divisor,
               paths_.closed(ChowParams(p, p + 1, d)));
        expect("divisor-recursive", {{"p", p}, {"d", d}}, divisor,
               paths_.recursive(ChowParams(p, p + 1, d)));
      }
    for (std::int64_t m = 0; m <= b_.max_d; ++m)
      expect("macdonald-zero-chi", {{"m", m}}, m == 0 ? 1 : 0, paths_.sp(0, m));
  }

private:
  void expect(const char *check, Inputs inputs, const ExactInt &expected, const ExactInt &actual) {
    ++report_.cases_run;
    if (expected != actual)
      report_.failures.push_back({check, std::move(inputs), expected, actual});
  }

  void expect_series(const char *check, const Inputs &inputs, const TruncatedSeries &expected,
                     const TruncatedSeries &actual) {
    ++report_.cases_run;
    for (std::int64_t d = 0; d <= expected.order(); ++d) {
      if (expected.coefficient(d) != actual.coefficient(d)) {
        Inputs at = inputs;
        at.emplace_back("d", d);
        report_.failures.push_back(
            {check, std::move(at), expected.coefficient(d), actual.coefficient(d)});
        return;
      }
    }
  }

  const SweepBounds &b_;
  const PathSet &paths_;
  VerificationReport &report_;
};

} // namespace

std::string_view to_string(Suite suite) noexcept {
  switch (suite) {
  case Suite::recursion:
    return "recursion";
  case Suite::series:
    return "series";
  case Suite::quaternionic:
    return "quaternionic";
  case Suite::base_cases:
    return "base-cases";
  case Suite::all:
    return "all";
  }
  return "unknown";
}

std::optional<Suite> parse_suite(std::string_view name) noexcept {
  for (auto s : {Suite::recursion, Suite::series, Suite::quaternionic, Suite::base_cases, Suite::all})
    if (to_string(s) == name)
      return s;
  return std::nullopt;
}

PathSet PathSet::reference() {
  PathSet paths;
  paths.binomial = [](std::int64_t n, std::int64_t k) { return chowcount::binomial(n, k); };
  paths.closed = [](const ChowParams &c) { return chow_euler_closed(c).chi; };
  paths.recursive = [](const ChowParams &c) { return chow_euler_recursive(c).chi; };
  paths.series = &chow_series;
  paths.points = &points_euler_recursive;
  paths.divisor = &divisor_check;
  paths.g_invariant = &g_invariant_euler;
  paths.quaternionic = &quaternionic_euler_closed;
  paths.quaternionic_p0 = &quaternionic_p0_oracle;
  paths.quaternionic_d1 = &quaternionic_d1_oracle;
  paths.sp = &sp_euler;
  paths.geom_pow = &series_geom_pow;
  return paths;
}

VerificationReport run_verification(Suite suite, const SweepBounds &bounds, const PathSet &paths) {
  if (bounds.max_p < 0 || bounds.max_n < 0 || bounds.max_d < 0 || bounds.order < 0)
    throw ParameterError("verification bounds must be nonnegative");

  VerificationReport report;
  report.suite = std::string(to_string(suite));
  const auto start = std::chrono::steady_clock::now();

  Sweep sweep(bounds, paths, report);
  if (suite == Suite::recursion || suite == Suite::all)
    sweep.recursion();
  if (suite == Suite::series || suite == Suite::all)
    sweep.series();
  if (suite == Suite::quaternionic || suite == Suite::all)
    sweep.quaternionic();
  if (suite == Suite::base_cases || suite == Suite::all)
    sweep.base_cases();

  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace chowcount
