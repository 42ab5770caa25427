#include "hartogs/roots.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "hartogs/error.hpp"

namespace hartogs {
namespace {

std::string sci(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3g", x);
  return buffer;
}

struct Evaluation {
  Complex value;
  Complex slope;
};

Evaluation horner_with_derivative(std::span<const Complex> c, Complex x) {
  Complex value = 0.0;
  Complex slope = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    slope = slope * x + value;
    value = value * x + *it;
  }
  return {value, slope};
}

std::vector<Complex> widen(std::span<const double> c) { return {c.begin(), c.end()}; }

double max_modulus(std::span<const Complex> c) {
  double best = 0.0;
  for (const auto& x : c) best = std::max(best, std::abs(x));
  return best;
}

// Initial guesses on a circle whose radius is the geometric mean of the
// root moduli, rotated off the real axis so conjugate pairs separate.
std::vector<Complex> initial_guesses(std::span<const Complex> c) {
  const std::size_t degree = c.size() - 1;
  const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(degree));
  std::vector<Complex> z(degree);
  for (std::size_t i = 0; i < degree; ++i) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(degree) + 0.4;
    z[i] = std::polar(radius, angle);
  }
  return z;
}

std::vector<Complex> aberth(std::span<const Complex> c, const AberthOptions& options) {
  const std::size_t degree = c.size() - 1;
  if (degree == 1) return {-c[0] / c[1]};

  std::vector<Complex> z = initial_guesses(c);
  std::vector<bool> converged(degree, false);
  constexpr double kStep = 1e-15;

  for (int iteration = 0; iteration < options.max_iterations; ++iteration) {
    bool all_done = true;
    for (std::size_t i = 0; i < degree; ++i) {
      if (converged[i]) continue;
      const auto [value, slope] = horner_with_derivative(c, z[i]);
      if (value == 0.0) {
        converged[i] = true;
        continue;
      }
      const Complex newton = value / slope;
      Complex repulsion = 0.0;
      for (std::size_t j = 0; j < degree; ++j)
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      const Complex step = newton / (1.0 - newton * repulsion);
      z[i] -= step;
      if (std::abs(step) <= kStep * std::max(1.0, std::abs(z[i]))) converged[i] = true;
      else all_done = false;
    }
    if (all_done) return z;
  }
  // Not every root met the step criterion; the caller's residual check decides.
  return z;
}

}  // namespace

double root_residual(std::span<const Complex> coefficients, Complex r) {
  if (coefficients.empty()) return 0.0;
  const double norm = max_modulus(coefficients);
  if (norm == 0.0) return 0.0;
  const double modulus = std::abs(r);
  if (modulus <= 1.0) return std::abs(horner_with_derivative(coefficients, r).value) / norm;
  // p(r) / r^deg = rev(p)(1/r)
  std::vector<Complex> reversed(coefficients.rbegin(), coefficients.rend());
  return std::abs(horner_with_derivative(reversed, 1.0 / r).value) / norm;
}

double root_residual(std::span<const double> coefficients, Complex r) {
  const auto wide = widen(coefficients);
  return root_residual(std::span<const Complex>(wide), r);
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coefficients, const AberthOptions& options) {
  std::size_t high = coefficients.size();
  while (high > 0 && coefficients[high - 1] == 0.0) --high;
  if (high == 0) throw Error(ErrorKind::RootFindingFailure, "the zero polynomial has no finite root set");

  std::size_t low = 0;
  while (coefficients[low] == 0.0) ++low;

  std::vector<Complex> roots(low, Complex(0.0));
  if (high - low <= 1) return roots;

  std::vector<Complex> scaled(coefficients.begin() + low, coefficients.begin() + high);
  const double norm = max_modulus(scaled);
  for (auto& x : scaled) x /= norm;

  auto found = aberth(scaled, options);
  for (auto& r : found) {
    // A plain Newton step tightens roots that stopped early on the step criterion.
    const auto [value, slope] = horner_with_derivative(scaled, r);
    if (slope != 0.0) {
      const Complex refined = r - value / slope;
      if (std::abs(horner_with_derivative(scaled, refined).value) < std::abs(value)) r = refined;
    }
    const double residual = root_residual(std::span<const Complex>(scaled), r);
    if (!(residual <= options.residual_tol))
      throw Error(ErrorKind::RootFindingFailure,
                  "root residual " + sci(residual) + " exceeds " + sci(options.residual_tol));
  }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

std::vector<Complex> polynomial_roots(std::span<const double> coefficients, const AberthOptions& options) {
  const auto wide = widen(coefficients);
  return polynomial_roots(std::span<const Complex>(wide), options);
}

Complex polish_root(std::span<const double> coefficients, Complex r, int max_steps) {
  const auto wide = widen(coefficients);
  double current = std::abs(horner_with_derivative(wide, r).value);
  for (int step = 0; step < max_steps && current > 0.0; ++step) {
    const auto [value, slope] = horner_with_derivative(wide, r);
    if (slope == 0.0) break;
    const Complex next = r - value / slope;
    const double next_value = std::abs(horner_with_derivative(wide, next).value);
    if (!(next_value < current)) break;
    r = next;
    current = next_value;
  }
  return r;
}

double bisect_root(const IntPolynomial& p, double lo, double hi) {
  if (!(lo < hi) || (lo < 0.0) != (hi < 0.0) || lo == 0.0 || hi == 0.0)
    throw Error(ErrorKind::InvalidArgument, "bisect_root: bracket must be ordered and on one side of zero");
  int sign_lo = p.sign_at(lo);
  const int sign_hi = p.sign_at(hi);
  if (sign_lo == 0) return lo;
  if (sign_hi == 0) return hi;
  if (sign_lo == sign_hi)
    throw Error(ErrorKind::RootFindingFailure,
                "bisect_root: no sign change on [" + sci(lo) + ", " + sci(hi) + "]");

  const double side = lo < 0.0 ? -1.0 : 1.0;
  for (;;) {
    const double mid = side * std::sqrt(lo * hi);
    if (!(mid > lo && mid < hi)) break;
    const int sign_mid = p.sign_at(mid);
    if (sign_mid == 0) return mid;
    if (sign_mid == sign_lo) {
      lo = mid;
      sign_lo = sign_mid;
    } else {
      hi = mid;
    }
  }
  // Adjacent doubles bracket the root; report the one with smaller |p|.
  return std::abs(p.evaluate(Complex(lo))) <= std::abs(p.evaluate(Complex(hi))) ? lo : hi;
}

}  // namespace hartogs
