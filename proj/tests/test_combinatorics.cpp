#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>
#include <vector>

#include "hartogs/combinatorics.hpp"
#include "hartogs/error.hpp"
#include "oracles.hpp"

using namespace hartogs;

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(3) == 6);
  CHECK(factorial(21) == ExactInt("51090942171709440000"));
  CHECK_THROWS_AS(factorial(-1), Error);
}

TEST_CASE("binomial") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 4) == 0);
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(60, 30) == ExactInt("118264581564861424"));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(ExactInt(7), 0) == 1);
  CHECK(pochhammer(ExactInt(3), 2) == 12);
  for (int k = 0; k <= 25; ++k) CHECK(pochhammer(ExactInt(1), k) == factorial(k));
  CHECK_THROWS_AS(pochhammer(ExactInt(1), -1), Error);
}

TEST_CASE("pochhammer exchange identity (m+1)_k / k! = (k+1)_m / m!") {
  for (int k = 0; k <= 30; ++k)
    for (int m = 0; m <= 30; ++m)
      REQUIRE(pochhammer(ExactInt(m + 1), k) * factorial(m) == pochhammer(ExactInt(k + 1), m) * factorial(k));
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian_number(3, 2) == 4);
  CHECK(eulerian_number(4, 2) == 11);
  for (int n = 1; n <= 12; ++n) CHECK(eulerian_number(n, 1) == 1);
  CHECK(eulerian_number(5, 0) == 0);
  CHECK(eulerian_number(5, 6) == 0);
  CHECK(eulerian_number(5, -2) == 0);
  CHECK_THROWS_AS(eulerian_number(0, 1), Error);

  SUBCASE("match descent counts over all permutations") {
    for (int n = 1; n <= 8; ++n)
      for (int m = 1; m <= n; ++m) REQUIRE(eulerian_number(n, m) == oracle::eulerian_by_descents(n, m));
  }
  SUBCASE("row sums are n! exactly") {
    for (int n = 1; n <= 20; ++n) {
      ExactInt sum = 0;
      for (const auto& a : eulerian_row(n)) sum += a;
      REQUIRE(sum == factorial(n));
    }
  }
  SUBCASE("rows are palindromic") {
    for (int n = 1; n <= 25; ++n)
      for (int m = 1; m <= n; ++m) REQUIRE(eulerian_number(n, m) == eulerian_number(n, n + 1 - m));
  }
}

TEST_CASE("eulerian polynomial") {
  CHECK(eulerian_polynomial(1) == IntPolynomial{1});
  CHECK(eulerian_polynomial(2) == IntPolynomial{1, 1});
  CHECK(eulerian_polynomial(3) == IntPolynomial{1, 4, 1});
  CHECK(eulerian_polynomial(4) == IntPolynomial{1, 11, 11, 1});
  for (int n = 1; n <= 15; ++n) CHECK(eulerian_polynomial(n).degree() == static_cast<std::size_t>(n - 1));
}

TEST_CASE("stirling numbers of the second kind") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(4, 2) == 7);
  for (int n = 1; n <= 15; ++n) {
    CHECK(stirling2(n, n) == 1);
    CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(n, 0) == 0);
    CHECK(stirling2(n, n + 1) == 0);
  }
  CHECK_THROWS_AS(stirling2(-1, 0), Error);

  SUBCASE("recurrence agrees with the explicit alternating sum") {
    for (int n = 0; n <= 30; ++n)
      for (int k = 0; k <= n; ++k) REQUIRE(stirling2(n, k) == oracle::stirling2_explicit(n, k));
  }
  SUBCASE("sum_k S(n,k) (x)_k falling = x^n") {
    for (int x = 1; x <= 6; ++x)
      for (int n = 0; n <= 8; ++n) {
        ExactInt sum = 0;
        for (int k = 0; k <= n; ++k) {
          ExactInt falling = 1;
          for (int i = 0; i < k; ++i) falling *= x - i;
          sum += stirling2(n, k) * falling;
        }
        REQUIRE(sum == boost::multiprecision::pow(ExactInt(x), static_cast<unsigned>(n)));
      }
  }
}

TEST_CASE("tables are safe to build concurrently") {
  std::vector<std::vector<ExactInt>> eulerian(8), stirling(8);
  {
    std::vector<std::jthread> threads;
    for (int i = 0; i < 8; ++i)
      threads.emplace_back([&, i] {
        eulerian[i] = eulerian_row(40 + i);
        stirling[i] = stirling2_row(40 + i);
      });
  }
  for (int i = 0; i < 8; ++i) {
    CHECK(eulerian[i] == eulerian_row(40 + i));
    CHECK(stirling[i] == stirling2_row(40 + i));
  }
}

TEST_CASE("int polynomial arithmetic") {
  const IntPolynomial p{1, 4, 1};
  CHECK(p.degree() == 2);
  CHECK(p.derivative() == IntPolynomial{4, 2});
  CHECK(p.evaluate(ExactInt(-1)) == -2);
  CHECK((p - p).is_zero());
  CHECK(IntPolynomial{0, 0, 0}.is_zero());
  CHECK(IntPolynomial::binomial_power(1, -1, 3) == IntPolynomial{1, -3, 3, -1});
  CHECK(p * IntPolynomial{1, 1} == IntPolynomial{1, 5, 5, 1});

  SUBCASE("exact sign at doubles") {
    // z^2 + 4z + 1 has roots -2 -+ sqrt(3)
    CHECK(p.sign_at(-0.26) == 1);
    CHECK(p.sign_at(-0.27) == -1);
    CHECK(p.sign_at(0.0) == 1);
    CHECK(IntPolynomial{1, 1}.sign_at(-1.0) == 0);
    CHECK(IntPolynomial{-1, 0, 4}.sign_at(0.5) == 0);
    CHECK(IntPolynomial{-1, 0, 4}.sign_at(std::nextafter(0.5, 1.0)) == 1);
    CHECK(IntPolynomial{-1, 0, 4}.sign_at(1e300) == 1);
  }
}
