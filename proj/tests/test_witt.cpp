#include <doctest.h>

#include <random>

#include "pauli/witt.hpp"

using namespace pauli;
using namespace pauli::witt;

TEST_CASE("arithmetic in Q(sqrt(-2))") {
  const QuadExtElt s{0, 1};
  CHECK(s * s == QuadExtElt{-2, 0});
  const QuadExtElt u{Rational(1, 2), 3}, v{-4, Rational(2, 5)};
  CHECK(u * v == v * u);
  CHECK((u * v).conjugate() == u.conjugate() * v.conjugate());
  CHECK((u + v) - v == u);
  const splitting::SplittingField f(3);
  CHECK(u.embed(f) * v.embed(f) == (u * v).embed(f));
  CHECK(to_string(QuadExtElt{1, -1}) == "1 - √-2");
  CHECK(to_string(QuadExtElt{0, Rational(5, 12)}) == "5/12*√-2");
}

TEST_CASE("T is an isometry of determinant one") {
  for (long k : {3L, 5L, 6L, 7L, 10L}) {
    CAPTURE(k);
    const auto c = check_T(k);
    CHECK(c.det_is_one);
    CHECK(c.isometry);
  }
  const auto c = check_T(Rational(3, 5));
  CHECK(c.det_is_one);
  CHECK(c.isometry);
  CHECK_THROWS_AS(witt_T(4), std::invalid_argument);
  // Perturbing one entry breaks the identities.
  auto t = witt_T(3);
  t[0][0] = t[0][0] + QuadExtElt{1, 0};
  CHECK_FALSE(transpose(t) * diagonal({2, 0}, {3, 0}, {Rational(1, 6), 0}) * t == identity3());
}

TEST_CASE("beta, rho and the square root certificate") {
  for (long k : {3L, 5L, 6L, 7L}) {
    CAPTURE(k);
    const splitting::SplittingField f(k);
    const auto br = witt_beta_rho(f);
    CHECK(br.rho == QuadExtElt{0, -4 * k});
    CHECK(br.factorization_holds);
    CHECK(br.a_minus_abar_nonzero);
    CHECK(br.flipped_by_L_fixgroup);
    CHECK(br.closed_form_holds);
    CHECK(br.all());
    // rho*beta is fixed by Gal(E/L) while its square root is not.
    const auto rb = br.rho_in_E * br.beta;
    CHECK(splitting::apply({4, 1}, rb) == rb);
    CHECK_FALSE(splitting::apply({4, 1}, br.sqrt_rho_beta) == br.sqrt_rho_beta);
  }
}
