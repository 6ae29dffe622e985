#include <chowcount/invariant.hpp>

#include <string>

#include <chowcount/binomial.hpp>
#include <chowcount/errors.hpp>

namespace chowcount {

QuaternionicParams::QuaternionicParams(std::int64_t p, std::int64_t n, std::int64_t d)
    : p_(p), n_(n), d_(d) {
  if (n < 1 || p < 0 || p > 2 * n - 1 || d < 0)
    throw ParameterError("invalid quaternionic parameters (p=" + std::to_string(p) +
                         ", n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                         "): need n >= 1, 0 <= p <= 2n-1 and d >= 0");
}

ExactInt g_invariant_euler(const ChowParams &params) {
  return binomial(ExactInt{v_pn(params.p(), params.n()) + params.d() - 1}, params.d());
}

ExactInt quaternionic_euler_closed(const QuaternionicParams &params) {
  const ExactInt v = binomial(2 * params.n(), params.p() + 1);
  return binomial(ExactInt{v + params.d() - 1}, params.d());
}

ExactInt quaternionic_p0_oracle(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 0)
    throw ParameterError("quaternionic_p0_oracle: need n >= 1 and d >= 0, got n=" +
                         std::to_string(n) + ", d=" + std::to_string(d));
  // chi(P^{n-1}) = n, so chi(SP^i P^{n-1}) = sp_euler(n, i).
  ExactInt total = 0;
  for (std::int64_t i = 0; i <= d; ++i)
    total += sp_euler(n, i) * sp_euler(n, d - i);
  return total;
}

ExactInt quaternionic_d1_oracle(std::int64_t p, std::int64_t n) {
  if (n < 1 || p < 0 || p > 2 * n - 1)
    throw ParameterError("quaternionic_d1_oracle: need n >= 1 and 0 <= p <= 2n-1, got p=" +
                         std::to_string(p) + ", n=" + std::to_string(n));
  ExactInt total = 0;
  for (std::int64_t i = 0; i <= p + 1; ++i) {
    if (i > n || p + 1 - i > n)
      continue;
    total += grassmannian_euler(i, n) * grassmannian_euler(p + 1 - i, n);
  }
  return total;
}

ExactInt sp_euler(std::int64_t chi, std::int64_t d) {
  if (d < 0)
    throw ParameterError("sp_euler: d must be nonnegative, got " + std::to_string(d));
  return binomial_signed(chi, d);
}

ExactInt grassmannian_euler(std::int64_t k, std::int64_t n) {
  if (n < 0 || k < 0 || k > n)
    throw ParameterError("grassmannian_euler: need 0 <= k <= n, got k=" + std::to_string(k) +
                         ", n=" + std::to_string(n));
  return binomial(n, k);
}

} // namespace chowcount
