#pragma once

#include <cstdint>

#include <chowcount/chow.hpp>
#include <chowcount/exact_int.hpp>

namespace chowcount {

/// Index of C_{p,d}(n): right-quaternionic p-cycles of degree d in
/// P^{2n-1}. Always satisfies n >= 1, 0 <= p <= 2n-1, d >= 0.
class QuaternionicParams {
public:
  /// Throws ParameterError outside the domain above.
  QuaternionicParams(std::int64_t p, std::int64_t n, std::int64_t d);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t n() const noexcept { return n_; }
  std::int64_t d() const noexcept { return d_; }

  /// The same cycles viewed in the ambient P^{2n-1}.
  ChowParams ambient() const { return ChowParams(p_, 2 * n_ - 1, d_); }

private:
  std::int64_t p_;
  std::int64_t n_;
  std::int64_t d_;
};

/// Euler characteristic of the G-invariant Chow variety C_{p,d}(P^n)^G for a
/// group acting through a diagonalizable unitary representation.
///
/// The representation is not modeled; diagonalizability is the caller's
/// obligation. The answer does not depend on which such G is chosen and
/// equals C(v_pn + d - 1, d). The fixed locus obeys the same suspension
/// recursion as the full Chow variety, which chow_euler_recursive exercises.
ExactInt g_invariant_euler(const ChowParams &params);

/// C(C(2n, p+1) + d - 1, d).
ExactInt quaternionic_euler_closed(const QuaternionicParams &params);

/// chi(C_{0,d}(n)) through the fixed-point decomposition
///   sum_{i=0..d} chi(SP^i P^{n-1}) chi(SP^{d-i} P^{n-1}).
/// Strata containing free J-orbits contribute chi(SP^m G(n)) = 0 and are
/// omitted. Throws unless n >= 1 and d >= 0.
ExactInt quaternionic_p0_oracle(std::int64_t n, std::int64_t d);

/// chi(C_{p,1}(n)) through the eigenspace decomposition into Grassmannians
///   sum_{i=0..p+1} chi(G(i, n)) chi(G(p+1-i, n)).
/// Throws unless n >= 1 and 0 <= p <= 2n-1.
ExactInt quaternionic_d1_oracle(std::int64_t p, std::int64_t n);

/// Macdonald: chi(SP^d X) is the coefficient of t^d in (1-t)^(-chi(X)).
/// Defined for any integer chi; chi(SP^0 X) = 1.
ExactInt sp_euler(std::int64_t chi, std::int64_t d);

/// chi(G(k, n)) = C(n, k), the number of Schubert cells.
ExactInt grassmannian_euler(std::int64_t k, std::int64_t n);

} // namespace chowcount
