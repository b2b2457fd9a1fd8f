#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pauli/groups.hpp"

using namespace pauli::groups;

namespace {

// Relabels the points of every generator by a fixed permutation.
FinGroup relabel(const FinGroup& g, const Perm& sigma) {
  std::vector<Perm> gens;
  for (const auto& x : g.generators()) gens.push_back(sigma * x * sigma.inverse());
  return FinGroup::closure(gens, g.degree());
}

Perm random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::uint8_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint8_t>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Perm(v);
}

}  // namespace

TEST_CASE("permutation basics") {
  const Perm p({1, 2, 0, 3});
  const Perm q({0, 1, 3, 2});
  CHECK((p * q)(2) == p(q(2)));
  CHECK(p.order() == 3);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.cycle_type() == std::vector<unsigned>{1, 3});
  CHECK(q.cycle_type() == std::vector<unsigned>{1, 1, 2});
  CHECK_THROWS_AS(Perm({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FinGroup::closure({Perm({1, 0}), Perm({1, 2, 0})}), std::invalid_argument);
}

TEST_CASE("closure of small groups") {
  const auto s3 = FinGroup::closure({Perm({1, 0, 2}), Perm({1, 2, 0})});
  CHECK(s3.order() == 6);
  CHECK(identify(s3) == "S3");
  CHECK(subgroups(s3).size() == 6);
  const auto c8 = FinGroup::closure({affine_perm(1, 1)});
  CHECK(c8.order() == 8);
  CHECK(identify(c8) == "C8");
  CHECK(c8.is_transitive());
  CHECK(hol_c8_model().order() == 32);
  CHECK(identify(hol_c8_model()) == "Hol(C8)");
  CHECK_THROWS_AS(affine_perm(0, 2), std::invalid_argument);
}

TEST_CASE("Pauli matrix group") {
  const auto mats = matrix_closure({pauli_x(), pauli_y(), pauli_z()});
  CHECK(mats.size() == 16);
  const auto g = pauli_matrix_group();
  CHECK(g.order() == 16);
  const auto fp = fingerprint(g);
  CHECK(fp.element_orders == std::map<unsigned, unsigned>{{1, 1}, {2, 7}, {4, 8}});
  CHECK(abelian_name(fp.center_type) == "C4");
  CHECK(abelian_name(fp.abelianization_type) == "E8");
  CHECK(fp.has_q8_subgroup);
  CHECK_FALSE(fp.has_element_of_order_8);
  const auto subs = subgroups(g);
  CHECK(subs.size() == 23);
  std::size_t proper = 0, proper_normal = 0, q8 = 0;
  for (const auto& s : subs) {
    if (s.group.order() == 1 || s.group.order() == 16) continue;
    ++proper;
    proper_normal += s.normal;
    q8 += is_q8(s.group);
  }
  CHECK(proper == 21);
  CHECK(proper_normal == 15);
  CHECK(q8 == 1);
  CHECK(identify(g) == "Pauli");
  CHECK(pauli_criteria(g).all());
  CHECK(quotient_type(g, center(g)) == "V4");
  CHECK(identify(derived_subgroup(g)) == "C2");
}

TEST_CASE("the order-16 catalog") {
  const auto& cat = order16_catalog();
  CHECK(cat.size() == 14);
  std::set<std::string> names;
  for (const auto& e : cat) {
    CAPTURE(e.name);
    CHECK(e.group.order() == 16);
    CHECK(identify(e.group) == e.name);
    names.insert(e.name);
    if (e.name != "Pauli") CHECK_FALSE(pauli_criteria(e.group).all());
  }
  CHECK(names.size() == 14);
  // Fingerprints separate all fourteen groups.
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK_FALSE(fingerprint(cat[i].group) == fingerprint(cat[j].group));
  const auto& cat8 = order8_catalog();
  CHECK(cat8.size() == 5);
  for (const auto& e : cat8) CHECK(identify(e.group) == e.name);
}

TEST_CASE("each Pauli criterion is needed") {
  // Every non-Pauli group of order 16 fails at least one criterion, and each
  // criterion alone is failed by some catalog group.
  bool fails[3] = {false, false, false};
  for (const auto& e : order16_catalog()) {
    if (e.name == "Pauli") continue;
    const auto c = pauli_criteria(e.group);
    const bool sat[3] = {c.no_element_of_order_8, c.has_non_normal_subgroup, c.has_q8_subgroup};
    int failed = 0;
    for (int i = 0; i < 3; ++i) failed += !sat[i];
    if (failed == 1)
      for (int i = 0; i < 3; ++i)
        if (!sat[i]) fails[i] = true;
  }
  CHECK(fails[0]);
  CHECK(fails[1]);
  CHECK(fails[2]);
}

TEST_CASE("identification is invariant under relabeling") {
  std::mt19937 rng(7);
  for (const auto& e : order16_catalog()) {
    const Perm sigma = random_perm(e.group.degree(), rng);
    const auto h = relabel(e.group, sigma);
    CHECK(h.order() == 16);
    CHECK(identify(h) == e.name);
    CHECK(fingerprint(h) == fingerprint(e.group));
  }
  const auto hol = hol_c8_model();
  for (int i = 0; i < 5; ++i) CHECK(identify(relabel(hol, random_perm(8, rng))) == "Hol(C8)");
}

TEST_CASE("subgroups of Hol(C8)") {
  const auto subs = subgroups(hol_c8_model());
  for (const auto& s : subs) {
    CHECK(32 % s.group.order() == 0);
    CHECK(s.group.is_subgroup_of(hol_c8_model()));
    CHECK(s.normal == is_normal(hol_c8_model(), s.group));
  }
  // Lagrange-closed and unique.
  std::set<std::vector<Perm>> seen;
  for (const auto& s : subs) CHECK(seen.insert(s.group.elements()).second);
}

TEST_CASE("abelian invariants") {
  const auto c4c2 = FinGroup::closure({affine_perm(1, 3), affine_perm(3, 7)});
  CHECK(c4c2.order() == 8);
  CHECK(abelian_invariants(c4c2) == std::vector<unsigned>{4, 2});
  CHECK(abelian_name({2, 2, 2}) == "E8");
  CHECK(abelian_name({}) == "1");
  CHECK(abelian_name({4, 4}) == "C4×C4");
  CHECK_THROWS(quotient(hol_c8_model(), FinGroup::closure({affine_perm(0, 3)})));
}
