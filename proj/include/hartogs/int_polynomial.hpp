#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hartogs {

using ExactInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Polynomial with exact integer coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<ExactInt> coefficients);
  IntPolynomial(std::initializer_list<long long> coefficients);

  /// Monomial c * t^power.
  static IntPolynomial monomial(const ExactInt& c, std::size_t power);
  /// (a + b t)^power expanded by the binomial theorem.
  static IntPolynomial binomial_power(long long a, long long b, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; 0 for constants and for the zero polynomial.
  std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  const std::vector<ExactInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of t^i, zero past the degree.
  ExactInt coefficient(std::size_t i) const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const ExactInt& scalar);
  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const ExactInt& s) { return lhs *= s; }
  friend IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  IntPolynomial derivative() const;

  /// Exact value at an integer point.
  ExactInt evaluate(const ExactInt& x) const;
  /// Sign (-1, 0, +1) of the value at x, computed exactly. Every finite
  /// double is a dyadic rational, so no rounding occurs.
  int sign_at(double x) const;

  /// Horner evaluation with coefficients rounded to double.
  Complex evaluate(Complex t) const;
  std::vector<double> to_double() const;
  /// max_i |c_i| as a double (0 for the zero polynomial).
  double max_abs_coefficient() const;

  std::string to_string() const;

 private:
  void normalize();

  std::vector<ExactInt> coeffs_;
};

}  // namespace hartogs
