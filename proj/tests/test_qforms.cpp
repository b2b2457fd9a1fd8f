#include <doctest.h>

#include <random>

#include "brute_force.hpp"
#include "pauli/binomial.hpp"
#include "pauli/qforms.hpp"

using namespace pauli;
using namespace pauli::qforms;

namespace {

const long kSmallPrimes[] = {2, 3, 5, 7, 11, 13};

Place at(long p) { return p == 0 ? Place::infinity() : Place::prime(p); }

int product_formula(const Rational& a, const Rational& b) {
  int prod = 1;
  for (const auto& v : relevant_places({a, b})) prod *= hilbert(a, b, v);
  return prod;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-2000, 2000), den(1, 500);
  long n = 0;
  while (n == 0) n = num(rng);
  return make_rational(n, den(rng));
}

}  // namespace

TEST_CASE("Hilbert symbol examples") {
  for (long p : {0L, 2L, 3L, 5L, 7L})
    for (long b : {-7L, -1L, 2L, 3L, 6L}) CHECK(hilbert(1, b, at(p)) == 1);
  CHECK(hilbert(-1, -1, Place::infinity()) == -1);
  CHECK(hilbert(-1, -1, at(2)) == -1);
  CHECK(hilbert(-1, -1, at(3)) == 1);
  CHECK(hilbert(2, 3, at(2)) == -1);
  CHECK(hilbert(2, 3, at(3)) == -1);
  CHECK(hilbert(Rational(2, 9), Rational(12, 1), at(2)) == -1);
  CHECK_THROWS_AS(hilbert(0, 3, at(3)), std::invalid_argument);
  CHECK_THROWS_AS(Place::prime(9), std::invalid_argument);
}

TEST_CASE("Hilbert symbol matches brute-force local solubility") {
  for (long p : kSmallPrimes)
    for (long a = -20; a <= 20; ++a)
      for (long b = -20; b <= 20; ++b) {
        if (a == 0 || b == 0) continue;
        CAPTURE(p);
        CAPTURE(a);
        CAPTURE(b);
        CHECK(hilbert(a, b, at(p)) == brute::hilbert(a, b, p));
      }
  for (long a = -20; a <= 20; ++a)
    for (long b = -20; b <= 20; ++b)
      if (a && b) CHECK(hilbert(a, b, Place::infinity()) == brute::hilbert(a, b, 0));
}

TEST_CASE("product formula, symmetry, multiplicativity") {
  std::mt19937_64 rng(31337);
  for (int n = 0; n < 500; ++n) {
    const Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK(product_formula(a, b) == 1);
    for (const auto& v : relevant_places({a, b, c})) {
      CHECK(hilbert(a, b, v) == hilbert(b, a, v));
      CHECK(hilbert(a * c, b, v) == hilbert(a, b, v) * hilbert(c, b, v));
      CHECK(hilbert(a, -a, v) == 1);
    }
  }
}

TEST_CASE("invariants of ternary forms") {
  const TernaryForm one(1, 1, 1);
  for (auto v : relevant_places({3, 5})) CHECK(hasse_invariant(one, v) == 1);
  CHECK(signature(one) == std::pair<int, int>{3, 0});
  CHECK(discriminant_class(one).is_trivial());

  const TernaryForm f(-1, 3, -3);
  CHECK(hasse_invariant(f, at(2)) == -1);
  CHECK(hasse_invariant(f, Place::infinity()) == -1);
  CHECK(hasse_invariant(f, at(3)) == 1);
  CHECK(hasse_invariant(f, at(5)) == 1);
  CHECK(signature(f) == std::pair<int, int>{1, 2});

  const TernaryForm g(1, -2, -2);
  CHECK(hasse_invariant(g, at(2)) == -1);
  CHECK(hasse_invariant(g, Place::infinity()) == -1);
  CHECK(signature(g) == std::pair<int, int>{1, 2});
  CHECK(discriminant_class(g).is_trivial());
  CHECK_THROWS_AS(TernaryForm(1, 0, 2), std::invalid_argument);
}

TEST_CASE("equivalence of forms") {
  CHECK(equivalent(TernaryForm(2, 3, 6), TernaryForm(1, 1, 1)));
  CHECK(equivalent(TernaryForm(-1, 3, -3), TernaryForm(1, -2, -2)));
  CHECK_FALSE(equivalent(TernaryForm(2, 3, 6), TernaryForm(1, -2, -2)));
  CHECK_FALSE(equivalent(TernaryForm(2, 5, 10), TernaryForm(1, 1, 1)));
  CHECK(equivalent(TernaryForm(Rational(1, 4), 18, 27), TernaryForm(1, 2, 3)));
}

TEST_CASE("equivalence is an equivalence relation and respects symmetries") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(-6, 6);
  auto pick = [&] {
    long x = 0;
    while (x == 0) x = small(rng);
    return Rational(x);
  };
  std::vector<TernaryForm> forms;
  for (int n = 0; n < 100; ++n) forms.emplace_back(pick(), pick(), pick());
  for (const auto& f : forms) {
    CHECK(equivalent(f, f));
    const auto c = f.values();
    CHECK(equivalent(f, TernaryForm(c[2], c[0], c[1])));
    CHECK(equivalent(f, TernaryForm(c[1] * 9, c[0] * 4, c[2] * Rational(1, 25))));
  }
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < 30; ++j) {
      CHECK(equivalent(forms[i], forms[j]) == equivalent(forms[j], forms[i]));
      if (!equivalent(forms[i], forms[j])) continue;
      for (std::size_t l = 0; l < 30; ++l)
        if (equivalent(forms[j], forms[l])) CHECK(equivalent(forms[i], forms[l]));
    }
}

TEST_CASE("isotropy") {
  const TernaryForm g(1, -2, -2);
  CHECK(isotropic(g));
  const auto w = isotropic_witness(g, 3);
  REQUIRE(w);
  CHECK(g.evaluate(*w) == 0);
  CHECK_FALSE(isotropic(TernaryForm(2, 3, 6)));
  CHECK(isotropic(TernaryForm(-1, 3, -3)));
  CHECK(TernaryForm(-1, 3, -3).evaluate({0, 1, 1}) == 0);
  CHECK_FALSE(isotropic(TernaryForm(1, 1, -3)));  // x^2 + y^2 = 3 z^2 has no rational zero
  // Local-global agreement with a bounded search on small forms.
  for (long a = -5; a <= 5; ++a)
    for (long b = -5; b <= 5; ++b)
      for (long c = -5; c <= 5; ++c) {
        if (!a || !b || !c) continue;
        const TernaryForm f(a, b, c);
        if (isotropic_witness(f, 12)) CHECK(isotropic(f));
      }
}

TEST_CASE("independence of square classes") {
  CHECK(quadratically_independent({-1, 3, -2}));
  CHECK_FALSE(quadratically_independent({1, 2, 3}));
  CHECK_FALSE(quadratically_independent({2, 3, 6}));
  CHECK_FALSE(quadratically_independent({2, 8}));
  CHECK(quadratically_independent({2, 3}));
}

TEST_CASE("Witt embedding") {
  CHECK(witt_embeddable(2, 3));
  CHECK_FALSE(witt_embeddable(2, 5));
  for (long b : {2L, 3L, 5L, -2L, 7L, 6L}) CHECK_FALSE(witt_embeddable(-1, b));
  CHECK_THROWS_AS(witt_embeddable(2, 8), std::invalid_argument);
  CHECK_THROWS_AS(witt_embeddable(1, 3), std::invalid_argument);
}

TEST_CASE("Pauli embedding and the Brauer condition") {
  CHECK(pauli_embeddable(-1, 3, -2));
  CHECK(pauli_embeddable(-1, 5, -2));
  CHECK_FALSE(pauli_embeddable(2, 3, -2));
  CHECK_FALSE(pauli_embeddable(2, 5, -2));
  CHECK(brauer_condition(-1, 3, -2));
  CHECK_THROWS_AS(pauli_embeddable(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(brauer_condition(2, 3, 6), std::invalid_argument);
  // L = Q(i, sqrt k, sqrt -2) embeds for every admissible k.
  for (long k = 2; k <= 60; ++k) {
    if (!binomial::pauli_condition(k)) continue;
    if (!quadratically_independent({-1, k, -2})) continue;
    CAPTURE(k);
    CHECK(pauli_embeddable(-1, k, -2));
  }
}

TEST_CASE("S_L search") {
  const auto sl = sl_search(2, 3, -2);
  CHECK_FALSE(sl.empty());
  const auto base = sl_search(-1, 3, -2);
  CHECK(std::find(base.begin(), base.end(), Triplet{-1, 3, -2}) != base.end());
  for (const auto& t : sl) CHECK(pauli_embeddable(t.u, t.v, t.x));
  CHECK(sl_set(2, 3, -2).size() == 7);
  CHECK_THROWS_AS(sl_search(1, 2, 3), std::invalid_argument);
}
