#pragma once

// Zeros of the Bergman kernel of D_{n,m}.
//
// The kernel is a nonvanishing factor times (d^m/dt^m Li_{-n})(t) evaluated
// at the argument map, and the argument map covers the open unit disk. So
// K has a zero exactly when the derivative numerator has a root with
// |t| < 1. Roots on the unit circle are not kernel zeros.

#include <optional>
#include <string>
#include <vector>

#include "hartogs/int_polynomial.hpp"
#include "hartogs/kernel.hpp"

namespace hartogs {

enum class ZeroStatus { ZeroFree, HasZero, Indeterminate };
enum class Provenance { TheoremExact, NumericRoots };

std::string_view to_string(ZeroStatus status) noexcept;
std::string_view to_string(Provenance provenance) noexcept;

struct LuQiKengVerdict {
  ZeroStatus status = ZeroStatus::Indeterminate;
  /// Present iff status == HasZero; a numerator root strictly inside the disk.
  std::optional<Complex> witness_root;
  Provenance provenance = Provenance::NumericRoots;
  std::string note;
};

struct Witness {
  DomainPoint point_a;
  DomainPoint point_b;
  Complex alpha;
  Complex kernel_value;
};

struct ClassifyOptions {
  /// Root residual contract passed to numerator_roots.
  double tol = 1e-8;
  /// Roots with ||r| - 1| below this are undecidable numerically.
  double boundary_band = 1e-9;
  /// Skip the closed-form cases and always analyse numerator roots.
  bool force_numeric = false;
};

/// Degrees above this get a conditioning warning in the verdict note.
inline constexpr int kConditioningWarningDegree = 30;

/// The n-1 roots of the Eulerian polynomial A_n, ascending (all negative).
/// Brackets come from interlacing with the roots of A_{n-1}; each root is
/// isolated by exact-sign bisection. tol is the residual contract
/// |A_n(r)| <= tol * max coefficient (normalised as in root_residual).
std::vector<double> eulerian_roots(int n, double tol = 1e-8);

/// All complex roots of the numerator of d^m Li_{-n}/dt^m.
std::vector<Complex> numerator_roots(int n, int m, double tol = 1e-8);

LuQiKengVerdict classify(int n, int m, const ClassifyOptions& options = {});

/// Two domain points whose argument map is alpha: z = z' = base,
/// zeta = sqrt(|alpha| exp(-mu |base|^2)) e_1, zeta' = exp(-i arg alpha) zeta.
/// With the default base z = 0. Requires |alpha| < 1.
Witness construct_witness(const KernelParams& params, Complex alpha);
Witness construct_witness(const KernelParams& params, Complex alpha, const ComplexVector& base);

struct LocusSample {
  Complex t;
  double modulus;
};

/// |d^m Li_{-n}/dt^m| on a polar grid over |t| <= 0.99: radii
/// 0.99 (i+1)/resolution and angles -pi + 2 pi j / resolution, radius-major.
/// Rows are computed on worker threads; the order is fixed.
std::vector<LocusSample> zero_locus_grid(int n, int m, int resolution);

}  // namespace hartogs
