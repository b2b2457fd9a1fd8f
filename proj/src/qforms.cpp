#include "pauli/qforms.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pauli::qforms {

using pauli::to_string;

namespace {

// (u - 1)/2 and (u^2 - 1)/8 mod 2 for an odd integer u.
int eps(const Integer& u) {
  const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 4);
  return r == 3 ? 1 : 0;
}

int omega(const Integer& u) {
  const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
  return (r == 3 || r == 5) ? 1 : 0;
}

// Splits a square-free n as p^alpha * u with p not dividing u.
std::pair<int, Integer> split(const Integer& n, const Integer& p) {
  if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) return {1, Integer(n / p)};
  return {0, n};
}

void require_independent(const std::vector<Rational>& values, const char* who) {
  for (const auto& q : values)
    if (q == 0) throw std::invalid_argument(std::string(who) + ": zero argument");
  if (!quadratically_independent(values)) {
    std::string list;
    for (const auto& q : values) list += (list.empty() ? "" : ", ") + to_string(q);
    throw std::invalid_argument(std::string(who) + ": square classes of (" + list + ") are dependent");
  }
}

}  // namespace

Place Place::prime(const Integer& p) {
  if (!is_probable_prime(p)) throw std::invalid_argument("Place: " + to_string(p) + " is not prime");
  Place v;
  v.p_ = p;
  return v;
}

std::string to_string(const Place& v) { return v.is_infinite() ? "inf" : to_string(v.p()); }

int hilbert(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert: zero argument");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  // The symbol only depends on square classes.
  const Integer x = SquareClass(a).representative();
  const Integer y = SquareClass(b).representative();
  const Integer& p = v.p();
  const auto [alpha, u] = split(x, p);
  const auto [beta, w] = split(y, p);
  if (p == 2) {
    const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
    return e % 2 ? -1 : 1;
  }
  int s = 1;
  if (alpha && beta && eps(p)) s = -s;
  if (beta) s *= legendre(u, p);
  if (alpha) s *= legendre(w, p);
  return s;
}

std::vector<Place> relevant_places(const std::vector<Rational>& values) {
  std::set<Integer> primes{Integer(2)};
  for (const auto& q : values)
    for (const auto& [p, e] : factor(SquareClass(q).representative()).exponents) primes.insert(p);
  std::vector<Place> out{Place::infinity()};
  for (const auto& p : primes) out.push_back(Place::prime(p));
  return out;
}

TernaryForm::TernaryForm(const Rational& a, const Rational& b, const Rational& c) {
  const Rational in[3] = {a, b, c};
  for (int n = 0; n < 3; ++n) {
    if (in[n] == 0) throw std::invalid_argument("TernaryForm: zero coefficient");
    coeffs_[n] = SquareClass(in[n]).representative();
  }
}

std::vector<Rational> TernaryForm::values() const {
  return {Rational(coeffs_[0]), Rational(coeffs_[1]), Rational(coeffs_[2])};
}

Integer TernaryForm::evaluate(const std::array<Integer, 3>& x) const {
  return coeffs_[0] * x[0] * x[0] + coeffs_[1] * x[1] * x[1] + coeffs_[2] * x[2] * x[2];
}

std::string to_string(const TernaryForm& f) {
  const auto& c = f.coefficients();
  return "[" + to_string(c[0]) + "," + to_string(c[1]) + "," + to_string(c[2]) + "]";
}

int hasse_invariant(const TernaryForm& f, const Place& v) {
  const auto x = f.values();
  return hilbert(x[0], x[1], v) * hilbert(x[0], x[2], v) * hilbert(x[1], x[2], v);
}

std::pair<int, int> signature(const TernaryForm& f) {
  int pos = 0;
  for (const auto& c : f.coefficients())
    if (c > 0) ++pos;
  return {pos, 3 - pos};
}

SquareClass discriminant_class(const TernaryForm& f) {
  const auto& c = f.coefficients();
  return SquareClass(Rational(c[0] * c[1] * c[2]));
}

bool equivalent(const TernaryForm& f, const TernaryForm& g) {
  if (!(discriminant_class(f) == discriminant_class(g))) return false;
  if (signature(f) != signature(g)) return false;
  auto values = f.values();
  const auto gv = g.values();
  values.insert(values.end(), gv.begin(), gv.end());
  for (const auto& v : relevant_places(values))
    if (hasse_invariant(f, v) != hasse_invariant(g, v)) return false;
  return true;
}

bool locally_isotropic(const TernaryForm& f, const Place& v) {
  const Rational minus_d = -discriminant_class(f).value();
  return hasse_invariant(f, v) == hilbert(-1, minus_d, v);
}

bool isotropic(const TernaryForm& f) {
  auto values = f.values();
  values.push_back(-1);
  for (const auto& v : relevant_places(values))
    if (!locally_isotropic(f, v)) return false;
  return true;
}

std::optional<std::array<Integer, 3>> isotropic_witness(const TernaryForm& f, unsigned bound) {
  const long b = static_cast<long>(bound);
  for (long x = 0; x <= b; ++x)
    for (long y = -b; y <= b; ++y)
      for (long z = -b; z <= b; ++z) {
        if (x == 0 && (y < 0 || (y == 0 && z <= 0))) continue;  // one vector per +- pair
        std::array<Integer, 3> v{Integer(x), Integer(y), Integer(z)};
        if (f.evaluate(v) == 0) return v;
      }
  return std::nullopt;
}

bool quadratically_independent(const std::vector<Rational>& values) {
  if (values.size() > 16) throw std::invalid_argument("quadratically_independent: too many values");
  std::vector<SquareClass> classes;
  for (const auto& q : values) {
    if (q == 0) return false;
    classes.emplace_back(q);
  }
  const unsigned n = static_cast<unsigned>(classes.size());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    SquareClass prod;
    for (unsigned i = 0; i < n; ++i)
      if (mask & (1u << i)) prod = prod * classes[i];
    if (prod.is_trivial()) return false;
  }
  return true;
}

bool witt_embeddable(const Rational& a1, const Rational& a2) {
  require_independent({a1, a2}, "witt_embeddable");
  return equivalent(TernaryForm(a1, a2, a1 * a2), TernaryForm(1, 1, 1));
}

bool pauli_embeddable(const Rational& a, const Rational& b, const Rational& c) {
  require_independent({a, b, c}, "pauli_embeddable");
  return equivalent(TernaryForm(a, b, a * b), TernaryForm(1, c, c));
}

bool brauer_condition(const Rational& a, const Rational& b, const Rational& c) {
  require_independent({a, b, c}, "brauer_condition");
  for (const auto& v : relevant_places({a, b, c, -1}))
    if (hilbert(a * b * c, -1, v) != hilbert(a, b, v)) return false;
  return true;
}

std::vector<SquareClass> sl_set(const Rational& a, const Rational& b, const Rational& c) {
  const SquareClass A(a), B(b), C(c);
  return {A, B, A * B, C, A * C, B * C, A * B * C};
}

std::vector<Triplet> sl_search(const Rational& a, const Rational& b, const Rational& c) {
  require_independent({a, b, c}, "sl_search");
  const auto s = sl_set(a, b, c);
  std::vector<Triplet> out;
  for (const auto& u : s)
    for (const auto& v : s)
      for (const auto& x : s) {
        if (u == v || u == x || v == x) continue;
        if (!quadratically_independent({u.value(), v.value(), x.value()})) continue;
        if (equivalent(TernaryForm(u.value(), v.value(), u.value() * v.value()), TernaryForm(1, x.value(), x.value())))
          out.push_back({u.representative(), v.representative(), x.representative()});
      }
  return out;
}

}  // namespace pauli::qforms
