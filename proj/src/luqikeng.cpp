#include "hartogs/luqikeng.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <thread>

#include "hartogs/combinatorics.hpp"
#include "hartogs/error.hpp"
#include "hartogs/polylog.hpp"
#include "hartogs/roots.hpp"

namespace hartogs {
namespace {

// Exact quotient p / (t - r) for an integer root r.
IntPolynomial deflate(const IntPolynomial& p, long long r) {
  const auto& c = p.coefficients();
  std::vector<ExactInt> q(c.size() - 1);
  ExactInt carry = 0;
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return IntPolynomial(std::move(q));
}

// In-disk root with the largest modulus; roots must be non-empty.
Complex outermost(const std::vector<Complex>& roots) {
  return *std::max_element(roots.begin(), roots.end(),
                           [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
}

LuQiKengVerdict classify_numeric(int n, int m, const ClassifyOptions& options) {
  LuQiKengVerdict verdict;
  verdict.provenance = Provenance::NumericRoots;
  std::ostringstream note;

  IntPolynomial numerator = polylog_deriv_numerator(n, m).numerator;
  int boundary_exact = 0;
  for (long long r : {-1LL, 1LL}) {
    while (!numerator.is_zero() && numerator.degree() > 0 && numerator.evaluate(ExactInt(r)) == 0) {
      numerator = deflate(numerator, r);
      ++boundary_exact;
    }
  }
  if (boundary_exact > 0)
    note << boundary_exact << " exact root(s) at t = +-1 excluded (open disk); ";

  std::vector<Complex> roots;
  const auto coefficients = numerator.to_double();
  try {
    roots = polynomial_roots(std::span<const double>(coefficients), AberthOptions{.residual_tol = options.tol});
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::RootFindingFailure) throw;
    verdict.status = ZeroStatus::Indeterminate;
    note << "root finding failed: " << e.what();
    verdict.note = note.str();
    return verdict;
  }

  std::vector<Complex> inside;
  std::size_t in_band = 0;
  for (Complex r : roots) {
    r = polish_root(coefficients, r);
    const double distance = std::abs(r) - 1.0;
    if (std::abs(distance) <= options.boundary_band) ++in_band;
    else if (distance < 0.0) inside.push_back(r);
  }

  if (!inside.empty()) {
    verdict.status = ZeroStatus::HasZero;
    verdict.witness_root = outermost(inside);
    note << inside.size() << " numerator root(s) inside the unit disk";
  } else if (in_band > 0) {
    verdict.status = ZeroStatus::Indeterminate;
    note << in_band << " numerator root(s) within " << options.boundary_band << " of the unit circle";
  } else {
    verdict.status = ZeroStatus::ZeroFree;
    note << "all " << roots.size() << " numerator root(s) lie outside the closed unit disk";
  }
  if (static_cast<int>(numerator.degree()) > kConditioningWarningDegree)
    note << "; warning: numerator degree " << numerator.degree() << " is poorly conditioned in double precision";
  verdict.note = note.str();
  return verdict;
}

}  // namespace

std::string_view to_string(ZeroStatus status) noexcept {
  switch (status) {
    case ZeroStatus::ZeroFree: return "ZeroFree";
    case ZeroStatus::HasZero: return "HasZero";
    case ZeroStatus::Indeterminate: return "Indeterminate";
  }
  return "Unknown";
}

std::string_view to_string(Provenance provenance) noexcept {
  switch (provenance) {
    case Provenance::TheoremExact: return "TheoremExact";
    case Provenance::NumericRoots: return "NumericRoots";
  }
  return "Unknown";
}

std::vector<double> eulerian_roots(int n, double tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "eulerian_roots: n must be >= 1");
  std::vector<double> previous;
  for (int k = 2; k <= n; ++k) {
    const IntPolynomial poly = eulerian_polynomial(k);
    // Cauchy bound with a monic leading term; the reciprocal bound follows
    // from the palindromic coefficients.
    const double bound = 1.0 + poly.max_abs_coefficient();
    std::vector<double> edges;
    edges.reserve(previous.size() + 2);
    edges.push_back(-bound);
    edges.insert(edges.end(), previous.begin(), previous.end());
    edges.push_back(-1.0 / bound);

    const auto coefficients = poly.to_double();
    std::vector<double> current;
    current.reserve(edges.size() - 1);
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      const double root = bisect_root(poly, edges[i], edges[i + 1]);
      const double residual = root_residual(std::span<const double>(coefficients), Complex(root));
      if (!(residual <= tol)) {
        std::ostringstream os;
        os << "Eulerian root residual " << residual << " exceeds " << tol << " for n = " << k;
        throw Error(ErrorKind::RootFindingFailure, os.str());
      }
      current.push_back(root);
    }
    previous = std::move(current);
  }
  return previous;
}

std::vector<Complex> numerator_roots(int n, int m, double tol) {
  const auto coefficients = polylog_deriv_numerator(n, m).numerator.to_double();
  auto roots = polynomial_roots(std::span<const double>(coefficients), AberthOptions{.residual_tol = tol});
  for (auto& r : roots) r = polish_root(coefficients, r);
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return roots;
}

LuQiKengVerdict classify(int n, int m, const ClassifyOptions& options) {
  if (n < 1 || m < 1) throw Error(ErrorKind::InvalidArgument, "classify: need n >= 1 and m >= 1");

  if (!options.force_numeric && n == 1) {
    return {ZeroStatus::ZeroFree, std::nullopt, Provenance::TheoremExact,
            "n = 1: the derivative numerator is m! (t + m), whose root -m is not inside the unit disk"};
  }
  if (!options.force_numeric && m == 1) {
    // d/dt Li_{-n} = A_{n+1}(t) / (1-t)^{n+2}; A_{n+1} has degree >= 2 with
    // real negative roots closed under r -> 1/r, so one lies inside the disk.
    const auto roots = eulerian_roots(n + 1, options.tol);
    std::vector<Complex> inside;
    for (double r : roots)
      if (std::abs(r) < 1.0 - options.boundary_band) inside.emplace_back(r);
    if (inside.empty())
      throw Error(ErrorKind::RootFindingFailure, "no Eulerian root inside the unit disk for n = " + std::to_string(n + 1));
    return {ZeroStatus::HasZero, outermost(inside), Provenance::TheoremExact,
            "m = 1: the Eulerian polynomial A_" + std::to_string(n + 1) + " has a root inside the unit disk"};
  }
  return classify_numeric(n, m, options);
}

Witness construct_witness(const KernelParams& params, Complex alpha) {
  return construct_witness(params, alpha, ComplexVector(params.n()));
}

Witness construct_witness(const KernelParams& params, Complex alpha, const ComplexVector& base) {
  const double r = std::abs(alpha);
  if (!(r < 1.0)) throw Error(ErrorKind::InvalidArgument, "construct_witness: |alpha| must be < 1");
  const double theta = std::arg(alpha);

  ComplexVector zeta(params.m());
  zeta[0] = std::sqrt(r * std::exp(-params.mu() * squared_norm(base)));
  ComplexVector zeta_rotated = zeta;
  zeta_rotated[0] *= std::polar(1.0, -theta);

  auto a = DomainPoint::make(params, base, std::move(zeta));
  auto b = DomainPoint::make(params, base, std::move(zeta_rotated));
  const Complex value = bergman_eq3(params, a, b);
  return {std::move(a), std::move(b), alpha, value};
}

std::vector<LocusSample> zero_locus_grid(int n, int m, int resolution) {
  if (resolution < 1) throw Error(ErrorKind::InvalidArgument, "zero_locus_grid: resolution must be >= 1");
  const RationalKernelForm form = polylog_deriv_numerator(n, m);
  const auto coefficients = form.numerator.to_double();
  const double scale = form.scale.convert_to<double>();

  const auto rows = static_cast<std::size_t>(resolution);
  std::vector<LocusSample> grid(rows * rows);
  const auto fill_row = [&](std::size_t i) {
    const double radius = 0.99 * static_cast<double>(i + 1) / static_cast<double>(resolution);
    for (std::size_t j = 0; j < rows; ++j) {
      const double angle = -std::numbers::pi + 2.0 * std::numbers::pi * static_cast<double>(j) / resolution;
      const Complex t = std::polar(radius, angle);
      Complex value = 0.0;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * t + *it;
      const double modulus = scale * std::abs(value) / std::pow(std::abs(1.0 - t), form.pole_order);
      grid[i * rows + j] = {t, modulus};
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rows);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < rows; i += workers) fill_row(i);
      });
  }
  return grid;
}

}  // namespace hartogs
