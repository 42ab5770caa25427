#pragma once

// Power-series summation in quad precision with a geometric tail bound.
// Shared by the polylogarithm and kernel series oracles.

#include <cmath>
#include <complex>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "hartogs/error.hpp"
#include "hartogs/polylog.hpp"

namespace hartogs::detail {

using Quad = boost::multiprecision::cpp_bin_float_quad;
using QuadComplex = boost::multiprecision::cpp_complex_quad;

inline QuadComplex to_quad(Complex z) { return QuadComplex(Quad(z.real()), Quad(z.imag())); }

inline Complex to_double(const QuadComplex& z) {
  return {z.real().convert_to<double>(), z.imag().convert_to<double>()};
}

inline double abs_double(const QuadComplex& z) {
  return std::hypot(z.real().convert_to<double>(), z.imag().convert_to<double>());
}

/// Sums coefficient(k) * x^k for k >= first_k.
///
/// ratio_factor(k) must bound |a_{j+1} / a_j| / |x| for every j >= k and be
/// non-increasing in k; it may return +inf where a_k vanishes.
template <class Coefficient, class RatioFactor>
QuadComplex sum_power_series(const QuadComplex& x, double tol, long first_k, Coefficient&& coefficient,
                             RatioFactor&& ratio_factor) {
  const double modulus = abs_double(x);
  if (!(modulus <= 1.0 - kConvergenceMargin))
    throw Error(ErrorKind::NonConvergent, "series argument modulus exceeds 1 - 1e-6 (got " + std::to_string(modulus) + ")");

  QuadComplex power = 1;
  for (long k = 0; k < first_k; ++k) power *= x;

  QuadComplex sum = 0;
  for (long k = first_k;; ++k) {
    if (k - first_k >= kSeriesIterationCap)
      throw Error(ErrorKind::IterationCap, "series did not meet its tail bound within " +
                                               std::to_string(kSeriesIterationCap) + " terms");
    const QuadComplex term = power * coefficient(k);
    sum += term;

    const double rho = modulus * ratio_factor(k);
    if (rho < 1.0) {
      const double tail = abs_double(term) * rho / (1.0 - rho);
      if (tail < tol * std::max(1.0, abs_double(sum))) break;
    }
    power *= x;
  }
  return sum;
}

}  // namespace hartogs::detail
