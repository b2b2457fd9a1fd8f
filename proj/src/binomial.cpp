#include "pauli/binomial.hpp"

#include <set>
#include <stdexcept>

namespace pauli::binomial {

using pauli::to_string;

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

Rational nth_root(const Rational& q, unsigned n) {
  Integer num, den;
  const Integer an = abs(q.get_num());
  mpz_root(num.get_mpz_t(), an.get_mpz_t(), n);
  mpz_root(den.get_mpz_t(), q.get_den_mpz_t(), n);
  return make_rational(q < 0 ? Integer(-num) : num, den);
}

void require_nonzero(const Rational& c, const char* what) {
  if (c == 0) throw std::invalid_argument(std::string(what) + ": constant term must be nonzero");
}

bool is_full(const groups::FinGroup& g) {
  std::set<unsigned> ts, ss;
  for (const auto& p : g.elements()) {
    ts.insert(static_cast<unsigned>(p(0)));
    ss.insert(static_cast<unsigned>((p(1) + 8 - p(0)) % 8));
  }
  return ts.size() == 8 && ss.size() == 4;
}

}  // namespace

std::string to_string(GaloisKind kind) {
  switch (kind) {
    case GaloisKind::Reducible: return "Reducible";
    case GaloisKind::K8: return "K8";
    case GaloisKind::D16: return "D16";
    case GaloisKind::QD16: return "QD16";
    case GaloisKind::Pauli: return "Pauli";
    case GaloisKind::B32: return "B32";
  }
  return "?";
}

GaloisTag make_tag(GaloisKind kind) {
  switch (kind) {
    case GaloisKind::Reducible: return {kind, std::nullopt};
    case GaloisKind::K8: return {kind, 8};
    case GaloisKind::B32: return {kind, 32};
    default: return {kind, 16};
  }
}

std::string GaloisTag::name() const { return to_string(kind); }

std::string GaloisTag::group_name() const {
  switch (kind) {
    case GaloisKind::K8: return "C4×C2";
    case GaloisKind::D16: return "D16";
    case GaloisKind::QD16: return "QD16";
    case GaloisKind::Pauli: return "Pauli";
    case GaloisKind::B32: return "Hol(C8)";
    case GaloisKind::Reducible: break;
  }
  return "";
}

IrreducibilityReport irreducibility_report(unsigned n, const Rational& c) {
  require_nonzero(c, "irreducibility");
  if (n == 0) throw std::invalid_argument("irreducibility: degree must be positive");
  const Rational gamma = -c;
  for (unsigned q : prime_divisors(n))
    if (is_nth_power(gamma, q))
      return {false, "-c = " + to_string(gamma) + " is a " + std::to_string(q) + "-th power (= " +
                         to_string(nth_root(gamma, q)) + "^" + std::to_string(q) + ")"};
  if (n % 4 == 0 && c > 0 && is_fourth_power(c / 4))
    return {false, "c = 4λ⁴, λ=" + to_string(nth_root(c / 4, 4))};
  std::string clause = "-c is not a q-th power for q | " + std::to_string(n);
  if (n % 4 == 0) clause += "; c ≠ 4λ⁴";
  return {true, clause};
}

bool is_irreducible_binomial(unsigned n, const Rational& c) { return irreducibility_report(n, c).irreducible; }

std::optional<std::string> pauli_violation(const Rational& k) {
  if (k <= 0) return "k must be positive (k = " + to_string(k) + ")";
  if (is_square(k)) return "k = λ² with λ=" + to_string(exact_sqrt(k));
  if (is_square(k / 2)) return "k = 2λ² with λ=" + to_string(exact_sqrt(k / 2));
  return std::nullopt;
}

bool pauli_condition(const Rational& k) {
  if (k <= 0) throw std::invalid_argument("pauli_condition: k must be positive");
  return !pauli_violation(k).has_value();
}

Classification classify_octic_detailed(const Rational& c) {
  require_nonzero(c, "classify_octic");
  Classification out;
  out.irreducibility = irreducibility_report(8, c);
  if (!out.irreducibility.irreducible) {
    out.tag = make_tag(GaloisKind::Reducible);
    out.branch = out.irreducibility.clause;
    return out;
  }
  if (is_fourth_power(c)) {
    out.tag = make_tag(GaloisKind::K8);
    out.branch = "c = d⁴, d=" + to_string(nth_root(c, 4));
  } else if (c > 0 && is_square(c / 2)) {
    out.tag = make_tag(GaloisKind::D16);
    out.branch = "c = 2d², d=" + to_string(exact_sqrt(c / 2));
  } else if (c < 0 && is_square(-c / 2)) {
    out.tag = make_tag(GaloisKind::QD16);
    out.branch = "c = -2d², d=" + to_string(exact_sqrt(-c / 2));
  } else if (is_square(c)) {
    out.tag = make_tag(GaloisKind::Pauli);
    out.branch = "c = k², k=" + to_string(exact_sqrt(c)) + " (k ≠ λ², 2λ²)";
  } else {
    out.tag = make_tag(GaloisKind::B32);
    out.branch = "c not of the forms d⁴, ±2d², k²";
  }
  return out;
}

GaloisTag classify_octic(const Rational& c) { return classify_octic_detailed(c).tag; }

bool schinzel_abelian(unsigned n, const Rational& c) {
  require_nonzero(c, "schinzel_abelian");
  if (n == 0) throw std::invalid_argument("schinzel_abelian: degree must be positive");
  return is_nth_power(c * c, n);
}

groups::FinGroup octic_model(GaloisKind kind) {
  using groups::affine_perm;
  using groups::FinGroup;
  switch (kind) {
    case GaloisKind::K8: return FinGroup::closure({affine_perm(1, 3), affine_perm(3, 7)});
    case GaloisKind::D16: return FinGroup::closure({affine_perm(1, 1), affine_perm(0, 7)});
    case GaloisKind::QD16: return FinGroup::closure({affine_perm(1, 1), affine_perm(0, 3)});
    case GaloisKind::Pauli: return FinGroup::closure({affine_perm(0, 5), affine_perm(1, 7), affine_perm(2, 1)});
    case GaloisKind::B32: return groups::hol_c8_model();
    case GaloisKind::Reducible: break;
  }
  throw std::invalid_argument("octic_model: reducible polynomials have no transitive model");
}

bool full_subgroup_bound(const GaloisTag& tag) {
  if (tag.kind == GaloisKind::Reducible) throw std::invalid_argument("full_subgroup_bound: tag is Reducible");
  const auto hol = groups::hol_c8_model();
  const std::size_t order = tag.kind == GaloisKind::K8 ? 8 : tag.kind == GaloisKind::B32 ? 32 : 16;
  if (hol.order() % order != 0) return false;
  const std::string want = tag.group_name();
  for (const auto& sub : groups::subgroups(hol))
    if (sub.group.order() == order && is_full(sub.group) && groups::identify(sub.group) == want) return true;
  return false;
}

}  // namespace pauli::binomial
