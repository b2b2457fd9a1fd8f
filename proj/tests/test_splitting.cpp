#include <doctest.h>

#include <algorithm>
#include <random>

#include "pauli/binomial.hpp"
#include "pauli/splitting.hpp"

using namespace pauli;
using namespace pauli::splitting;

namespace {

FieldElt random_elt(const SplittingField& f, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-5, 5), den(1, 3);
  std::array<Rational, kDegree> c;
  for (auto& x : c) x = make_rational(d(rng), den(rng));
  return f.from_coefficients(c);
}

bool subset(const std::vector<AffineAut>& small, const std::vector<AffineAut>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

TEST_CASE("field construction") {
  CHECK_NOTHROW(SplittingField(3));
  CHECK_THROWS_AS(SplittingField(4), std::invalid_argument);
  CHECK_THROWS_AS(SplittingField(8), std::invalid_argument);
  CHECK_THROWS_AS(SplittingField(-3), std::invalid_argument);
  try {
    SplittingField f(8);
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("2λ²") != std::string::npos);
  }
  const SplittingField f(3);
  CHECK(f.a().pow(8) == f.scalar(-9));
}

TEST_CASE("reduction rules and derived elements") {
  for (long k : {3L, 5L, 6L, 7L}) {
    const SplittingField f(k);
    CAPTURE(k);
    CHECK(f.a() * f.a().pow(7) == f.scalar(-k * k));
    CHECK(f.w() * f.w() == f.i());
    CHECK(f.i() * f.i() == f.scalar(-1));
    CHECK(f.r() * f.r() == f.scalar(2));
    CHECK(f.v2() * f.v2() == f.scalar(k));
    CHECK(f.w().pow(8) == f.one());
    CHECK(f.w().pow(4) == f.scalar(-1));
    // a * abar = v2 and the two conjugate-sum identities.
    CHECK(f.a() * f.abar() == f.v2());
    const auto sum = f.a() + f.abar(), diff = f.a() - f.abar();
    CHECK(sum * sum == f.v2() * (f.scalar(2) + f.r()));
    CHECK(diff * diff == -(f.v2() * (f.scalar(2) - f.r())));
  }
}

TEST_CASE("ring axioms on random elements") {
  const SplittingField f(5);
  std::mt19937 rng(2024);
  for (int n = 0; n < 40; ++n) {
    const auto x = random_elt(f, rng), y = random_elt(f, rng), z = random_elt(f, rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * y == y * x);
    CHECK(x - x == f.zero());
    if (!x.is_zero()) CHECK(x * x.inverse() == f.one());
  }
  CHECK_THROWS_AS(f.zero().inverse(), std::domain_error);
  const SplittingField g(3);
  CHECK_THROWS_AS(f.a() + g.a(), std::invalid_argument);
}

TEST_CASE("Galois group") {
  const auto gal = galois_group();
  CHECK(gal.size() == 16);
  const auto g = root_action(gal);
  CHECK(g.order() == 16);
  CHECK(groups::identify(g) == "Pauli");
  for (const auto& s : gal) {
    CHECK(s.is_valid());
    CHECK(from_root_perm(s.root_perm()) == s);
    for (const auto& t : gal) {
      CHECK(s.after(t).is_valid());
      // (s o t) acting on roots is the permutation product.
      CHECK(s.after(t).root_perm() == s.root_perm() * t.root_perm());
    }
    CHECK(s.after(s.inverse()) == AffineAut{0, 1});
  }
  CHECK_FALSE((AffineAut{0, 3}).is_valid());
  CHECK_FALSE((AffineAut{1, 1}).is_valid());
}

TEST_CASE("automorphisms are ring maps") {
  const SplittingField f(7);
  std::mt19937 rng(99);
  const auto x = random_elt(f, rng), y = random_elt(f, rng);
  for (const auto& s : galois_group()) {
    CAPTURE(to_string(s));
    CHECK(respects_relations(f, s));
    CHECK(apply(s, x * y) == apply(s, x) * apply(s, y));
    CHECK(apply(s, x + y) == apply(s, x) + apply(s, y));
    CHECK(apply(s, f.scalar(Rational(2, 7))) == f.scalar(Rational(2, 7)));
    CHECK(apply(s, f.a()).pow(8) == f.scalar(-49));
    for (const auto& t : galois_group()) CHECK(apply(s, apply(t, x)) == apply(s.after(t), x));
  }
  CHECK(apply({4, 1}, f.a()) == -f.a());
  // Invalid pairs are not ring maps.
  CHECK_FALSE(respects_relations(f, {1, 1}));
  CHECK_THROWS_AS(apply({1, 1}, f.a()), std::invalid_argument);
}

TEST_CASE("root product is X^8 + k^2") {
  for (long k : {3L, 5L}) {
    const SplittingField f(k);
    const auto poly = root_product(f);
    REQUIRE(poly.size() == 9);
    CHECK(poly[0] == f.scalar(k * k));
    for (int n = 1; n < 8; ++n) CHECK(poly[n].is_zero());
    CHECK(poly[8] == f.one());
  }
}

TEST_CASE("fixed fields and the Galois correspondence") {
  const SplittingField f(3);
  const auto report = lattice_report(f);
  CHECK(report.entries.size() == 23);
  for (const auto& e : report.entries) {
    CHECK(e.field.degree * e.subgroup.size() == 16);
    for (const auto& b : e.field.basis)
      for (const auto& s : e.subgroup) CHECK(apply(s, b) == b);
    // The primitive element's stabilizer is exactly H.
    CHECK(fixgroup({e.field.primitive}) == e.subgroup);
  }
  for (const auto& small : report.entries)
    for (const auto& big : report.entries) {
      if (!subset(small.subgroup, big.subgroup)) continue;
      // fixed(big) is contained in fixed(small).
      for (const auto& b : big.field.basis)
        for (const auto& s : small.subgroup) CHECK(apply(s, b) == b);
    }
  CHECK_THROWS_AS(fixed_field(f, {{0, 1}, {1, 3}}), std::invalid_argument);
}

TEST_CASE("textual anchors of the correspondence") {
  const SplittingField f(5);
  const auto ir = f.i() * f.r();
  const auto q8 = fixgroup({ir});
  CHECK(q8.size() == 8);
  CHECK(groups::is_q8(root_action(q8)));
  const auto ff = fixed_field(f, q8);
  CHECK(ff.degree == 2);
  CHECK(ff.label == std::optional<std::string>("Q(√-2)"));

  const auto z = groups::center(root_action(galois_group()));
  std::vector<AffineAut> zc;
  for (const auto& p : z.elements()) zc.push_back(from_root_perm(p));
  std::sort(zc.begin(), zc.end());
  CHECK(zc == fixgroup({f.i(), f.v2()}));
  CHECK(fixed_field(f, zc).degree == 4);

  const auto g = root_action(galois_group());
  CHECK_FALSE(groups::is_normal(g, root_action(fixgroup({f.a()}))));
  CHECK_FALSE(groups::is_normal(g, root_action(fixgroup({f.w() * f.a()}))));

  const auto report = lattice_report(f);
  int normal_octics = 0;
  for (const auto& e : report.entries)
    if (e.field.degree == 8 && e.normal) {
      ++normal_octics;
      CHECK(e.field.label == std::optional<std::string>("L = Q(w,a²)"));
      CHECK(e.subgroup == std::vector<AffineAut>{{0, 1}, {4, 1}});
    }
  CHECK(normal_octics == 1);
  std::size_t by_degree[17] = {};
  for (const auto& e : report.entries) ++by_degree[e.field.degree];
  CHECK(by_degree[2] == 7);
  CHECK(by_degree[4] == 7);
  CHECK(by_degree[8] == 7);
}

TEST_CASE("every named subfield matches one lattice entry") {
  const SplittingField f(6);
  const auto report = lattice_report(f);
  std::size_t labelled = 0;
  for (const auto& e : report.entries) labelled += e.field.label.has_value();
  CHECK(labelled == report.entries.size());
  for (const auto& named : named_subfields(f)) {
    const auto h = fixgroup(named.generators);
    CAPTURE(named.label);
    CHECK(std::count_if(report.entries.begin(), report.entries.end(),
                        [&](const LatticeEntry& e) { return e.subgroup == h && e.field.label == named.label; }) == 1);
  }
}

TEST_CASE("lattice text and DOT output") {
  const auto report = lattice_report(SplittingField(3));
  const auto text = lattice_text(report);
  CHECK(text.find("21 proper nontrivial (15 normal)") != std::string::npos);
  const auto dot = lattice_dot(report);
  CHECK(dot.rfind("digraph lattice {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '[') >= 23);
  CHECK(dot.find("Q(√-2)") != std::string::npos);
  CHECK(lattice_text(lattice_report(SplittingField(3))) == text);
}
