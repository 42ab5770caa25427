#include "hartogs/polylog.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hartogs/combinatorics.hpp"
#include "hartogs/error.hpp"
#include "series.hpp"

namespace hartogs {
namespace {

void require_order(int n, const char* what) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": order n must be >= 1");
}

void require_derivative(int m, const char* what) {
  if (m < 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": derivative order must be >= 0");
}

void guard_pole(Complex t) {
  if (std::abs(1.0 - t) < kPoleGuard)
    throw Error(ErrorKind::PoleProximity, "argument within 1e-12 of the pole at t = 1");
}

Complex int_power(Complex base, int exponent) {
  Complex out = 1.0;
  while (exponent > 0) {
    if (exponent & 1) out *= base;
    base *= base;
    exponent >>= 1;
  }
  return out;
}

}  // namespace

Complex RationalKernelForm::evaluate(Complex t) const {
  guard_pole(t);
  return scale.convert_to<double>() * numerator.evaluate(t) / int_power(1.0 - t, pole_order);
}

bool RationalKernelForm::same_function(const RationalKernelForm& other) const {
  // a N1 / (1-t)^p1 == b N2 / (1-t)^p2  <=>  a N1 (1-t)^(q-p1) == b N2 (1-t)^(q-p2)
  const int common = std::max(pole_order, other.pole_order);
  const auto lhs = numerator * IntPolynomial::binomial_power(1, -1, common - pole_order) * scale;
  const auto rhs = other.numerator * IntPolynomial::binomial_power(1, -1, common - other.pole_order) * other.scale;
  return lhs == rhs;
}

Complex polylog_series(int s, Complex z, double tol) {
  const int growth = std::max(-s, 0);
  const auto coefficient = [s](long k) {
    return s <= 0 ? boost::multiprecision::pow(detail::Quad(k), -s) : 1 / boost::multiprecision::pow(detail::Quad(k), s);
  };
  // |a_{k+1} / a_k| = |z| ((k+1)/k)^{-s}, decreasing in k.
  const auto ratio = [growth](long k) { return std::pow(1.0 + 1.0 / static_cast<double>(k), growth); };
  return detail::to_double(detail::sum_power_series(detail::to_quad(z), tol, 1, coefficient, ratio));
}

Complex polylog_neg_closed(int n, Complex z) {
  require_order(n, "polylog_neg_closed");
  guard_pole(z);
  return z * eulerian_polynomial(n).evaluate(z) / int_power(1.0 - z, n + 1);
}

RationalKernelForm polylog_deriv_numerator(int n, int m) {
  require_order(n, "polylog_deriv_numerator");
  require_derivative(m, "polylog_deriv_numerator");
  IntPolynomial numerator;
  for (int j = 0; j <= n; ++j) {
    ExactInt c = pochhammer(ExactInt(m + 1), j) * stirling2(n + 1, j + 1);
    if ((n + j) % 2) c = -c;
    numerator += IntPolynomial::binomial_power(1, -1, n - j) * c;
  }
  return {std::move(numerator), n + m + 1, factorial(m)};
}

Complex polylog_deriv_closed(int n, int m, Complex t) {
  return polylog_deriv_numerator(n, m).evaluate(t);
}

Complex polylog_deriv_series(int n, int m, Complex t, double tol) {
  require_order(n, "polylog_deriv_series");
  require_derivative(m, "polylog_deriv_series");
  const auto coefficient = [n, m](long k) {
    detail::Quad rising = 1;
    for (int i = 1; i <= m; ++i) rising *= k + i;
    return rising * boost::multiprecision::pow(detail::Quad(k + m), n);
  };
  // (k+1+m)/(k+1) * ((k+1+m)/(k+m))^n, decreasing in k.
  const auto ratio = [n, m](long k) {
    if (k + m == 0) return std::numeric_limits<double>::infinity();
    const double kd = static_cast<double>(k);
    return (1.0 + m / (kd + 1.0)) * std::pow(1.0 + 1.0 / (kd + m), n);
  };
  return detail::to_double(detail::sum_power_series(detail::to_quad(t), tol, 0, coefficient, ratio));
}

RationalKernelForm lemma5_form(int m) {
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "lemma5_form: m must be >= 1");
  return {IntPolynomial{m, 1}, m + 2, factorial(m)};
}

Complex lemma5_closed(int m, Complex t) {
  return lemma5_form(m).evaluate(t);
}

}  // namespace hartogs
