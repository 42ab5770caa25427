#pragma once

// Exact integer sequences: factorials, binomials, rising factorials,
// Eulerian numbers and Stirling numbers of the second kind.
//
// Out-of-range indices yield 0 instead of throwing, so summation loops can
// run over generous bounds. Negative n where the sequence needs n >= 0
// throws Error(InvalidArgument).

#include <vector>

#include "hartogs/int_polynomial.hpp"

namespace hartogs {

ExactInt factorial(int n);

/// C(n, k); 0 when k < 0 or k > n.
ExactInt binomial(int n, int k);

/// Rising factorial a(a+1)...(a+k-1); 1 when k == 0.
ExactInt pochhammer(const ExactInt& a, int k);

/// Eulerian number A(n, m) = sum_{l=0}^{m} (-1)^l C(n+1, l) (m-l)^n,
/// indexed so that A(n, 1) = A(n, n) = 1. Zero for m <= 0 or m > n.
/// Requires n >= 1.
ExactInt eulerian_number(int n, int m);

/// Row n of the Eulerian triangle: {A(n,1), ..., A(n,n)}.
std::vector<ExactInt> eulerian_row(int n);

/// A_n(z) = sum_{j=0}^{n-1} A(n, j+1) z^j, degree n-1.
IntPolynomial eulerian_polynomial(int n);

/// Stirling number of the second kind S(n, k) from the recurrence
/// S(n,k) = k S(n-1,k) + S(n-1,k-1). Zero outside 0 <= k <= n.
ExactInt stirling2(int n, int k);

/// Row n of the Stirling triangle: {S(n,0), ..., S(n,n)}.
std::vector<ExactInt> stirling2_row(int n);

}  // namespace hartogs
