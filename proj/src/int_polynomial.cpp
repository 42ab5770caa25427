#include "hartogs/int_polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hartogs {

IntPolynomial::IntPolynomial(std::vector<ExactInt> coefficients)
    : coeffs_(std::move(coefficients)) {
  normalize();
}

IntPolynomial::IntPolynomial(std::initializer_list<long long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long long c : coefficients) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::monomial(const ExactInt& c, std::size_t power) {
  std::vector<ExactInt> coeffs(power + 1);
  coeffs[power] = c;
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial IntPolynomial::binomial_power(long long a, long long b, std::size_t power) {
  // (a + b t)^p = sum_k C(p,k) a^(p-k) b^k t^k
  std::vector<ExactInt> coeffs(power + 1);
  ExactInt choose = 1;
  for (std::size_t k = 0; k <= power; ++k) {
    coeffs[k] = choose * boost::multiprecision::pow(ExactInt(a), static_cast<unsigned>(power - k)) *
                boost::multiprecision::pow(ExactInt(b), static_cast<unsigned>(k));
    choose = choose * (power - k) / (k + 1);
  }
  return IntPolynomial(std::move(coeffs));
}

ExactInt IntPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ExactInt(0);
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const ExactInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& lhs, const IntPolynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<ExactInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * i;
  return IntPolynomial(std::move(out));
}

ExactInt IntPolynomial::evaluate(const ExactInt& x) const {
  ExactInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int IntPolynomial::sign_at(double x) const {
  if (!std::isfinite(x)) throw std::invalid_argument("IntPolynomial::sign_at: non-finite argument");
  if (is_zero()) return 0;
  if (x == 0.0) return coeffs_.front().sign();

  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  const auto mantissa = static_cast<long long>(std::ldexp(fraction, 53));
  const int shift = exponent - 53;  // x == mantissa * 2^shift exactly

  if (shift >= 0) {
    ExactInt xi = ExactInt(mantissa) << shift;
    return evaluate(xi).sign();
  }
  // q^deg * p(M / q) = sum_i c_i M^i q^(deg - i), with q = 2^-shift > 0.
  const ExactInt m(mantissa);
  const ExactInt q = ExactInt(1) << (-shift);
  ExactInt acc = 0;
  ExactInt q_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * m + *it * q_pow;
    q_pow *= q;
  }
  return acc.sign();
}

Complex IntPolynomial::evaluate(Complex t) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->convert_to<double>();
  return acc;
}

std::vector<double> IntPolynomial::to_double() const {
  std::vector<double> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.convert_to<double>());
  return out;
}

double IntPolynomial::max_abs_coefficient() const {
  double best = 0.0;
  for (const auto& c : coeffs_) best = std::max(best, std::abs(c.convert_to<double>()));
  return best;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? ", " : "") << coeffs_[i];
  os << ']';
  return os.str();
}

}  // namespace hartogs
