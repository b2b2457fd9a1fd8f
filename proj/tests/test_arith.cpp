#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "pauli/arith.hpp"
#include "pauli/linalg.hpp"

using namespace pauli;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+4/2") == 2);
  CHECK(to_string(parse_rational("10/4")) == "5/2");
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("factorization round trip") {
  for (long n : {2L, 12L, -360L, 1L, 9973L, 1000003L * 1000033L}) {
    const auto f = factor(Integer(n));
    CHECK(f.value() == n);
    for (const auto& [p, e] : f.exponents) CHECK(is_probable_prime(p));
  }
  const Rational q(-98, 45);
  CHECK(factor(q).value() == q);
  CHECK_THROWS_AS(factor(Integer(0)), std::invalid_argument);
  // Two 31-bit primes beyond the trial-division range.
  const Integer big = Integer("2147483647") * Integer("2147483629");
  const auto f = factor(big);
  REQUIRE(f.exponents.size() == 2);
  CHECK(f.value() == big);
}

TEST_CASE("primality agrees with sieve below 10^4") {
  const auto primes = primes_below(10000);
  std::vector<bool> is_p(10000, false);
  for (auto p : primes) is_p[p] = true;
  for (unsigned n = 0; n < 10000; ++n) CHECK(is_probable_prime(Integer(n)) == is_p[n]);
  CHECK(is_probable_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
  CHECK_FALSE(is_probable_prime(Integer("3215031751")));  // strong pseudoprime to 2, 3, 5, 7
}

TEST_CASE("square classes on 500 random rationals") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 3000);
  for (int i = 0; i < 500; ++i) {
    long n = num(rng);
    if (n == 0) n = 1;
    const long d = den(rng);
    const Rational q = make_rational(n, d);
    const SquareClass s(q);
    // q / rep is a rational square.
    CHECK(is_square(q / s.value()));
    CHECK(s.representative() == brute::squarefree(n * d));
    // Stable under multiplication by squares.
    const long t = den(rng);
    CHECK(SquareClass(q * t * t) == s);
    CHECK(squarefree_part(q) == s);
    // Multiplicative.
    const Rational r = make_rational(num(rng) | 1, den(rng));
    CHECK(SquareClass(q * r) == SquareClass(q) * SquareClass(r));
    CHECK((s * s).is_trivial());
  }
  CHECK_THROWS_AS(SquareClass(Rational(0)), std::invalid_argument);
}

TEST_CASE("power tests") {
  CHECK(is_square(Rational(9, 4)));
  CHECK_FALSE(is_square(Rational(-9)));
  CHECK(is_fourth_power(16));
  CHECK_FALSE(is_fourth_power(4));
  CHECK(is_nth_power(-8, 3));
  CHECK(is_nth_power(Rational(-1, 27), 3));
  CHECK_FALSE(is_nth_power(-4, 2));
  CHECK(exact_sqrt(Rational(49, 81)) == Rational(7, 9));
  CHECK_THROWS_AS(exact_sqrt(2), std::domain_error);
}

TEST_CASE("valuations and Legendre symbols") {
  CHECK(valuation(Rational(48, 5), 2) == 4);
  CHECK(valuation(Rational(48, 25), 5) == -2);
  CHECK_THROWS_AS(valuation(4, 6), std::invalid_argument);
  for (long p : {3L, 5L, 7L, 11L, 13L, 97L})
    for (long a = -30; a <= 30; ++a) CHECK(legendre(a, p) == brute::legendre(a, p));
  CHECK_THROWS_AS(legendre(3, 2), std::invalid_argument);
  CHECK_THROWS_AS(legendre(3, 9), std::invalid_argument);
}

TEST_CASE("linear algebra over Q") {
  using namespace linalg;
  Matrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  const auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += row[j] * ns[0][j];
    CHECK(s == 0);
  }
  const auto x = solve({{2, 1}, {1, 3}}, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(solve({{1, 1}, {1, 1}}, {1, 2}));
  CHECK(nullspace({}, 2).size() == 2);
}
