#include <doctest.h>

#include "brute_force.hpp"
#include "pauli/binomial.hpp"
#include "pauli/oracle.hpp"

using namespace pauli;
using namespace pauli::oracle;

namespace {

brute::Poly octic(const Rational& c, long p) {
  brute::Poly f(9, 0);
  f[0] = static_cast<long>(reduce_mod(c, static_cast<std::uint64_t>(p)));
  f[8] = 1;
  return f;
}

}  // namespace

TEST_CASE("factor_mod_p against trial division") {
  CHECK(factor_mod_p(-1, 3) == CycleType{1, 1, 2, 2, 2});
  for (long p : {3L, 5L, 7L})
    for (long c = -40; c <= 40; ++c) {
      if (c == 0 || c % p == 0) continue;
      CAPTURE(p);
      CAPTURE(c);
      CHECK(factor_mod_p(c, p) == brute::factor_degrees(octic(c, p), p));
    }
  CHECK(factor_mod_p(Rational(1, 4), 5) == brute::factor_degrees(octic(Rational(1, 4), 5), 5));
  CHECK_THROWS_AS(factor_mod_p(9, 3), std::invalid_argument);
  CHECK_THROWS_AS(factor_mod_p(9, 2), std::invalid_argument);
  CHECK_THROWS_AS(factor_mod_p(9, 15), std::invalid_argument);
  CHECK_THROWS_AS(factor_mod_p(Rational(1, 7), 7), std::invalid_argument);
}

TEST_CASE("factor degrees sum to 8; split case") {
  for (unsigned p : primes_below(3000)) {
    if (p == 2 || p == 3) continue;
    const auto t = factor_mod_p(3, p);
    unsigned sum = 0;
    for (auto d : t) sum += d;
    CHECK(sum == 8);
  }
  // p = 1 mod 16 and c an 8th power mod p: X^8 + c has 8 roots iff -c is an
  // 8th power; with c = -x^8 every root of unity of order 8 gives a root.
  for (unsigned p : primes_below(2000)) {
    if (p % 16 != 1) continue;
    CAPTURE(p);
    CHECK(factor_mod_p(-256, p) == CycleType(8, 1));
  }
}

TEST_CASE("cycle types of permutation models") {
  const auto pauli_model = binomial::octic_model(binomial::GaloisKind::Pauli);
  const auto t = group_cycle_types(pauli_model);
  CHECK(t.at(CycleType(8, 1)) == Rational(1, 16));
  CHECK(t.count(CycleType{4, 4}));
  CHECK(groups::affine_perm(1, 3).cycle_type() == CycleType{4, 4});
  const auto c8 = groups::FinGroup::closure({groups::affine_perm(1, 1)});
  const auto tc = group_cycle_types(c8);
  CHECK(tc.size() == 4);
  CHECK(tc.at(CycleType{8}) == Rational(1, 2));
  CHECK(tc.at(CycleType{2, 2, 2, 2}) == Rational(1, 8));
  Rational total = 0;
  for (const auto& [type, q] : group_cycle_types(groups::hol_c8_model())) total += q;
  CHECK(total == 1);
  CHECK_THROWS_AS(group_cycle_types(groups::pauli_matrix_group()), std::invalid_argument);
}

TEST_CASE("census bookkeeping") {
  const auto c = census(9, 100);
  CHECK(c.total == 23);  // 25 primes below 100, minus 2 and 3
  CHECK(c.skipped == std::vector<std::uint64_t>{2, 3});
  std::uint64_t sum = 0;
  for (const auto& [t, n] : c.counts) sum += n;
  CHECK(sum == c.total);
  CHECK_THROWS_AS(census(9, 50), std::invalid_argument);
  CHECK_THROWS_AS(census(0, 1000), std::invalid_argument);
  CHECK_THROWS_AS(consistent(c, binomial::octic_model(binomial::GaloisKind::Pauli), Rational(1, 20)),
                  std::invalid_argument);
  CHECK(to_string(c).find("good primes: 23") != std::string::npos);
}

TEST_CASE("census of X^8 + 9 lies inside the Pauli model") {
  const auto c = census(9, 10000);
  const auto model = group_cycle_types(binomial::octic_model(binomial::GaloisKind::Pauli));
  for (const auto& [t, n] : c.counts) CHECK(model.count(t));
}

TEST_CASE("abelian signature for c = 16") {
  const auto c = census(16, 10000);
  for (const auto& [t, n] : c.counts) CHECK(has_equal_parts(t));
}

TEST_CASE("consistency verdict is monotone in tolerance") {
  const auto c = census(2, 20000);
  for (const auto& stock : stock_models()) {
    if (!stock.model) continue;
    bool passed = false;
    for (int n = 0; n <= 40; ++n) {
      const bool now = consistent(c, *stock.model, Rational(n, 40)).pass;
      if (passed) CHECK(now);
      passed = passed || now;
    }
  }
}

TEST_CASE("stock models") {
  const auto& models = stock_models();
  CHECK(models.size() == 8);
  int excluded = 0;
  for (const auto& m : models) excluded += !m.model.has_value();
  CHECK(excluded == 3);
  CHECK(predicted_model(binomial::classify_octic(9)) == std::optional<std::string>("Pauli"));
  CHECK_FALSE(predicted_model(binomial::classify_octic(4)).has_value());
}
