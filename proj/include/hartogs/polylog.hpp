#pragma once

// Negative-order polylogarithms Li_{-n}(t) = sum_{k>=1} k^n t^k and their
// t-derivatives, as exact rational functions of t and as truncated series.
//
// The rational forms have a single pole at t = 1. Closed-form evaluators
// refuse to run within kPoleGuard of it; series evaluators require
// |t| <= 1 - kConvergenceMargin.

#include "hartogs/int_polynomial.hpp"

namespace hartogs {

inline constexpr double kPoleGuard = 1e-12;
inline constexpr double kConvergenceMargin = 1e-6;
inline constexpr long kSeriesIterationCap = 1'000'000;

/// scale * numerator(t) / (1 - t)^pole_order
struct RationalKernelForm {
  IntPolynomial numerator;
  int pole_order = 1;
  ExactInt scale = 1;

  /// Throws Error(PoleProximity) when |1 - t| < kPoleGuard.
  Complex evaluate(Complex t) const;

  /// Cross-multiplied equality of the represented rational functions.
  bool same_function(const RationalKernelForm& other) const;
};

/// Li_s(z) = sum_{k>=1} k^{-s} z^k, summed in quad precision and truncated
/// with a geometric tail bound: after term a_K the remainder is at most
/// |a_K| rho / (1 - rho), where rho bounds every later term ratio. The sum
/// stops once that bound drops below tol * max(1, |partial sum|).
/// Throws NonConvergent if |z| > 1 - kConvergenceMargin and IterationCap
/// if more than kSeriesIterationCap terms are needed.
Complex polylog_series(int s, Complex z, double tol);

/// Li_{-n}(z) = z A_n(z) / (1 - z)^{n+1} with A_n the Eulerian polynomial.
Complex polylog_neg_closed(int n, Complex z);

/// Rational form of d^m/dt^m Li_{-n}(t):
///   m! sum_{j=0}^{n} (-1)^{n+j} (m+1)_j S(n+1, j+1) (1-t)^{n-j} / (1-t)^{n+m+1}
/// with the numerator expanded into powers of t over the integers.
RationalKernelForm polylog_deriv_numerator(int n, int m);

Complex polylog_deriv_closed(int n, int m, Complex t);

/// sum_{k>=0} (k+1)_m (k+m)^n t^k, the termwise m-th derivative of the
/// Li_{-n} series. Same truncation rule and errors as polylog_series.
Complex polylog_deriv_series(int n, int m, Complex t, double tol);

/// d^{m-1}/dt^{m-1} [Li_{-2}(t) / t] = m! (t + m) / (1 - t)^{m+2}.
RationalKernelForm lemma5_form(int m);
Complex lemma5_closed(int m, Complex t);

}  // namespace hartogs
