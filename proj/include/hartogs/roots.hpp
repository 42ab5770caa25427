#pragma once

// Polynomial root finding: Aberth-Ehrlich simultaneous iteration for
// general complex roots, and exact-sign bisection for real roots of
// integer polynomials.

#include <span>
#include <vector>

#include "hartogs/int_polynomial.hpp"

namespace hartogs {

struct AberthOptions {
  int max_iterations = 2000;
  /// Residual contract; see root_residual.
  double residual_tol = 1e-8;
};

/// Backward-error style residual of r for p with ascending coefficients:
/// |p(r)| / (max(1, |r|)^deg * max_i |c_i|). For |r| > 1 this equals the
/// residual of the reversed polynomial at 1/r.
double root_residual(std::span<const Complex> coefficients, Complex r);
double root_residual(std::span<const double> coefficients, Complex r);

/// All roots of the polynomial with ascending complex coefficients,
/// including exact zeros from vanishing low-order coefficients. The
/// coefficients are rescaled by their maximum modulus first. Throws
/// RootFindingFailure if the iteration stalls or any root misses the
/// residual contract.
std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients, const AberthOptions& options = {});
std::vector<Complex> polynomial_roots(std::span<const double> coefficients, const AberthOptions& options = {});

/// Newton refinement of a single simple root; stops when a step no longer
/// decreases |p|.
Complex polish_root(std::span<const double> coefficients, Complex r, int max_steps = 8);

/// Root of p in the open interval (lo, hi), lo < hi < 0 or 0 < lo < hi,
/// given exact signs of opposite parity at the ends. Bisects in the
/// logarithm of |x| until the bracket is one ulp wide, using
/// IntPolynomial::sign_at so every comparison is exact. Throws
/// RootFindingFailure if the endpoints have equal signs.
double bisect_root(const IntPolynomial& p, double lo, double hi);

}  // namespace hartogs
