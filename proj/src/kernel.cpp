#include "hartogs/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hartogs/combinatorics.hpp"
#include "hartogs/error.hpp"
#include "hartogs/polylog.hpp"
#include "series.hpp"

namespace hartogs {
namespace {

constexpr double kQuotientFloor = 1e-14;

void require_lengths(const KernelParams& params, const ComplexVector& z, const ComplexVector& zeta) {
  if (z.size() != static_cast<std::size_t>(params.n()) || zeta.size() != static_cast<std::size_t>(params.m())) {
    std::ostringstream os;
    os << "point has dimensions (" << z.size() << ", " << zeta.size() << "), expected (" << params.n() << ", "
       << params.m() << ")";
    throw Error(ErrorKind::LengthMismatch, os.str());
  }
}

Complex guarded_exp(Complex exponent) {
  if (exponent.real() > kMaxExponent)
    throw Error(ErrorKind::Overflow, "exponent real part " + std::to_string(exponent.real()) + " exceeds " +
                                         std::to_string(kMaxExponent));
  return std::exp(exponent);
}

// mu^n / pi^{n+m}
double prefactor(const KernelParams& params) {
  return std::pow(params.mu(), params.n()) / std::pow(std::numbers::pi, params.n() + params.m());
}

}  // namespace

KernelParams::KernelParams(int n, int m, double mu) : n_(n), m_(m), mu_(mu) {
  if (n < 1 || m < 1 || !(mu > 0.0) || !std::isfinite(mu)) {
    std::ostringstream os;
    os << "kernel parameters need n >= 1, m >= 1, mu > 0; got n=" << n << ", m=" << m << ", mu=" << mu;
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
}

DomainPoint DomainPoint::make(const KernelParams& params, ComplexVector z, ComplexVector zeta) {
  if (!domain_contains(params, z, zeta)) {
    std::ostringstream os;
    os << "point violates |zeta|^2 < exp(-mu |z|^2): |zeta|^2 = " << squared_norm(zeta)
       << ", exp(-mu |z|^2) = " << std::exp(-params.mu() * squared_norm(z));
    throw Error(ErrorKind::InvalidPoint, os.str());
  }
  return DomainPoint(std::move(z), std::move(zeta));
}

DomainPoint DomainPoint::unchecked(ComplexVector z, ComplexVector zeta) {
  return DomainPoint(std::move(z), std::move(zeta));
}

DomainPoint DomainPoint::origin(const KernelParams& params) {
  return DomainPoint(ComplexVector(params.n()), ComplexVector(params.m()));
}

Complex inner_product(const ComplexVector& u, const ComplexVector& v) {
  if (u.size() != v.size())
    throw Error(ErrorKind::LengthMismatch,
                "inner product of vectors of length " + std::to_string(u.size()) + " and " + std::to_string(v.size()));
  Complex acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * std::conj(v[j]);
  return acc;
}

double squared_norm(const ComplexVector& u) {
  double acc = 0.0;
  for (const auto& c : u) acc += std::norm(c);
  return acc;
}

bool domain_contains(const KernelParams& params, const ComplexVector& z, const ComplexVector& zeta) {
  require_lengths(params, z, zeta);
  for (const auto& c : z)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  for (const auto& c : zeta)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return squared_norm(zeta) < std::exp(-params.mu() * squared_norm(z));
}

Complex fock_bargmann(int n, double mu, const ComplexVector& z, const ComplexVector& w) {
  if (n < 1 || !(mu > 0.0)) throw Error(ErrorKind::InvalidArgument, "fock_bargmann: need n >= 1 and mu > 0");
  if (z.size() != static_cast<std::size_t>(n) || w.size() != static_cast<std::size_t>(n))
    throw Error(ErrorKind::LengthMismatch, "fock_bargmann: vectors must have length n = " + std::to_string(n));
  return std::pow(mu / std::numbers::pi, n) * guarded_exp(mu * inner_product(z, w));
}

Complex argument_map(const KernelParams& params, const DomainPoint& p, const DomainPoint& q) {
  return guarded_exp(params.mu() * inner_product(p.z(), q.z())) * inner_product(p.zeta(), q.zeta());
}

Complex bergman_eq3(const KernelParams& params, const DomainPoint& p, const DomainPoint& q) {
  const Complex t = argument_map(params, p, q);
  const Complex weight = guarded_exp(static_cast<double>(params.m()) * params.mu() * inner_product(p.z(), q.z()));
  return prefactor(params) * weight * polylog_deriv_closed(params.n(), params.m(), t);
}

Complex bergman_eq4(const KernelParams& params, const DomainPoint& p, const DomainPoint& q) {
  const int n = params.n();
  const int m = params.m();
  const Complex c = guarded_exp(params.mu() * inner_product(p.z(), q.z()));
  const Complex x = c * inner_product(p.zeta(), q.zeta());
  if (std::abs(1.0 - x) < kPoleGuard) throw Error(ErrorKind::PoleProximity, "bergman_eq4: argument at the pole");

  IntPolynomial a_deriv = eulerian_polynomial(n + 1);
  const Complex one_minus = 1.0 - x;
  Complex sum = 0.0;
  for (int i = 0; i <= m - 1; ++i) {
    const double weight = (binomial(m - 1, i) * pochhammer(ExactInt(n + 2), m - 1 - i)).convert_to<double>();
    sum += weight * a_deriv.evaluate(x) / std::pow(one_minus, n + m + 1 - i);
    a_deriv = a_deriv.derivative();
  }
  Complex c_power = 1.0;
  for (int i = 0; i < m; ++i) c_power *= c;
  return prefactor(params) * c_power * sum;
}

Complex bergman_eq4_quotient(const KernelParams& params, const DomainPoint& p, const DomainPoint& q) {
  const int n = params.n();
  const int m = params.m();
  const Complex c = guarded_exp(params.mu() * inner_product(p.z(), q.z()));
  const Complex t = inner_product(p.zeta(), q.zeta());
  if (std::abs(t) < kQuotientFloor)
    throw Error(ErrorKind::InvalidArgument, "bergman_eq4_quotient: <zeta, zeta'> too close to the removable singularity");

  Complex sum = 0.0;
  Complex c_power = 1.0;
  for (int j = 0; j <= m - 1; ++j) {
    const int r = m - 1 - j;
    const double weight = (binomial(m - 1, j) * factorial(r)).convert_to<double>() * (r % 2 ? -1.0 : 1.0);
    sum += weight * c_power * polylog_deriv_closed(n + 1, j, c * t) / std::pow(t, r + 1);
    c_power *= c;
  }
  return prefactor(params) * sum;
}

Complex bergman_series(const KernelParams& params, const DomainPoint& p, const DomainPoint& q, double tol) {
  using detail::Quad;
  using detail::QuadComplex;
  const int n = params.n();
  const int m = params.m();

  const QuadComplex zz = detail::to_quad(inner_product(p.z(), q.z()));
  const QuadComplex exponent = QuadComplex(Quad(params.mu())) * zz;
  if (exponent.real() * m > kMaxExponent)
    throw Error(ErrorKind::Overflow, "bergman_series: exponent exceeds " + std::to_string(kMaxExponent));
  const QuadComplex c = exp(exponent);

  // zeta inner product in quad so the argument carries no double rounding.
  QuadComplex zeta_ip = 0;
  for (std::size_t j = 0; j < p.zeta().size(); ++j)
    zeta_ip += detail::to_quad(p.zeta()[j]) * conj(detail::to_quad(q.zeta()[j]));
  const QuadComplex x = c * zeta_ip;

  // (m+1)_k / k! updated incrementally; exact in quad up to rounding.
  Quad weight = 1;
  long weight_index = 0;
  const auto coefficient = [&](long k) {
    while (weight_index < k) {
      weight = weight * (m + 1 + weight_index) / (weight_index + 1);
      ++weight_index;
    }
    return weight * boost::multiprecision::pow(Quad(k + m), n);
  };
  const auto ratio = [n, m](long k) {
    const double kd = static_cast<double>(k);
    return (1.0 + m / (kd + 1.0)) * std::pow(1.0 + 1.0 / (kd + m), n);
  };
  const QuadComplex sum = detail::sum_power_series(x, tol, 0, coefficient, ratio);

  const Quad pi = boost::math::constants::pi<Quad>();
  const Quad scale = Quad(factorial(m).convert_to<double>()) * pow(Quad(params.mu()), n) / pow(pi, n + m);
  return detail::to_double(QuadComplex(scale) * exp(exponent * m) * sum);
}

}  // namespace hartogs
