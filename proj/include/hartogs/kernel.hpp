#pragma once

// Bergman kernel of the Hartogs domain
//
//   D_{n,m} = { (z, zeta) in C^n x C^m : |zeta|^2 < exp(-mu |z|^2) }
//
// evaluated three ways: through the m-th derivative of Li_{-n}, through the
// (m-1)-th derivative of Li_{-(n+1)}(c t)/t, and through the series of
// weighted Fock-Bargmann kernels. Inner products are linear in the first
// slot and conjugate-linear in the second, so K(p, q) is holomorphic in p
// and anti-holomorphic in q.
//
// Kernel values are only meaningful for points inside the domain; points
// built with DomainPoint::unchecked carry no accuracy guarantee.

#include <vector>

#include "hartogs/int_polynomial.hpp"

namespace hartogs {

using ComplexVector = std::vector<Complex>;

/// Exponents with real part above this are rejected as Overflow.
inline constexpr double kMaxExponent = 700.0;

class KernelParams {
 public:
  /// Throws Error(InvalidArgument) unless n >= 1, m >= 1 and mu > 0.
  KernelParams(int n, int m, double mu);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  double mu() const noexcept { return mu_; }

 private:
  int n_;
  int m_;
  double mu_;
};

class DomainPoint {
 public:
  /// Validates lengths (LengthMismatch) and the strict defining inequality
  /// (InvalidPoint).
  static DomainPoint make(const KernelParams& params, ComplexVector z, ComplexVector zeta);
  /// No validation; for boundary experiments.
  static DomainPoint unchecked(ComplexVector z, ComplexVector zeta);
  /// (0, 0) for the given dimensions.
  static DomainPoint origin(const KernelParams& params);

  const ComplexVector& z() const noexcept { return z_; }
  const ComplexVector& zeta() const noexcept { return zeta_; }

 private:
  DomainPoint(ComplexVector z, ComplexVector zeta) : z_(std::move(z)), zeta_(std::move(zeta)) {}

  ComplexVector z_;
  ComplexVector zeta_;
};

/// sum_j u_j conj(v_j). Throws LengthMismatch.
Complex inner_product(const ComplexVector& u, const ComplexVector& v);

double squared_norm(const ComplexVector& u);

/// |zeta|^2 < exp(-mu |z|^2). Throws LengthMismatch if the vector lengths
/// do not match (n, m).
bool domain_contains(const KernelParams& params, const ComplexVector& z, const ComplexVector& zeta);

/// Fock-Bargmann kernel mu^n exp(mu <z, w>) / pi^n.
Complex fock_bargmann(int n, double mu, const ComplexVector& z, const ComplexVector& w);

/// exp(mu <z, z'>) <zeta, zeta'>, which lies in the open unit disk for
/// valid points.
Complex argument_map(const KernelParams& params, const DomainPoint& p, const DomainPoint& q);

/// mu^n / pi^{n+m} exp(m mu <z,z'>) (d^m/dt^m Li_{-n})(argument_map).
Complex bergman_eq3(const KernelParams& params, const DomainPoint& p, const DomainPoint& q);

/// mu^n / pi^{n+m} d^{m-1}/dt^{m-1} [Li_{-(n+1)}(c t) / t] at t = <zeta, zeta'>,
/// c = exp(mu <z, z'>).
///
/// Writing Li_{-(n+1)}(x) = x A_{n+1}(x) / (1-x)^{n+2} cancels the 1/t, so
/// the quotient is the polynomial-over-power c A_{n+1}(c t) (1 - c t)^{-(n+2)}
/// and the Leibniz rule gives
///
///   c^m sum_{i=0}^{m-1} C(m-1, i) (n+2)_{m-1-i} A_{n+1}^{(i)}(x) / (1-x)^{n+m+1-i}
///
/// with x = c t. No special case is needed at t = 0.
Complex bergman_eq4(const KernelParams& params, const DomainPoint& p, const DomainPoint& q);

/// Same quantity by the Leibniz rule applied to Li_{-(n+1)}(c t) times 1/t,
///
///   sum_{j=0}^{m-1} C(m-1, j) c^j Li_{-(n+1)}^{(j)}(c t) (-1)^{m-1-j} (m-1-j)! / t^{m-j},
///
/// which suffers cancellation as t -> 0. Requires |<zeta, zeta'>| >= 1e-14
/// (InvalidArgument otherwise).
Complex bergman_eq4_quotient(const KernelParams& params, const DomainPoint& p, const DomainPoint& q);

/// (m! mu^n / pi^{n+m}) exp(m mu <z,z'>)
///   * sum_k ((m+1)_k / k!) (k+m)^n exp(k mu <z,z'>) <zeta,zeta'>^k
/// in quad precision, truncated as in polylog_series.
Complex bergman_series(const KernelParams& params, const DomainPoint& p, const DomainPoint& q, double tol);

}  // namespace hartogs
