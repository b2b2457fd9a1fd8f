#include "pauli/arith.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pauli {

namespace {

constexpr unsigned long kTrialBound = 1000000;

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer n(std::string(s), 10);
  return negative ? Integer(-n) : n;
}

bool miller_rabin_round(const Integer& n, const Integer& base, const Integer& d, unsigned r) {
  Integer x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const Integer nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, g = 1, q = 1, ys;
    const unsigned long m = 64;
    unsigned long r = 1;
    auto f = [&](const Integer& v) { return Integer((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        Integer diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::map<Integer, int>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  Integer d = pollard_brent(n);
  split_into(d, out);
  split_into(Integer(n / d), out);
}

void factor_positive(Integer n, std::map<Integer, int>& out, int direction) {
  std::map<Integer, int> local;
  for (unsigned long p = 2; p < kTrialBound; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++local[Integer(p)];
      n /= p;
    }
  }
  split_into(n, local);
  for (const auto& [p, e] : local) out[p] += direction * e;
}

}  // namespace

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const auto den_text = text.substr(slash + 1);
  if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), Integer(std::string(den_text), 10));
}

std::string to_string(const Integer& n) { return n.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

Rational Factorization::value() const {
  Rational v = sign;
  for (const auto& [p, e] : exponents) {
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::abs(e)));
    if (e > 0)
      v *= pe;
    else
      v /= pe;
  }
  return v;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  static const unsigned small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : small) {
    if (n == p) return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  Integer d = n - 1;
  unsigned r = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++r;
  }
  // These bases are deterministic below 3.3e24; GMP's randomized rounds cover the rest.
  for (unsigned p : small)
    if (!miller_rabin_round(n, Integer(p), d, r)) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

Factorization factor(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::map<Integer, int> exps;
  factor_positive(abs(n), exps, +1);
  Factorization f;
  f.sign = n < 0 ? -1 : 1;
  for (auto& [p, e] : exps)
    if (e != 0) f.exponents.emplace_back(p, e);
  return f;
}

Factorization factor(const Rational& q) {
  if (q == 0) throw std::invalid_argument("factor: zero has no factorization");
  std::map<Integer, int> exps;
  factor_positive(abs(q.get_num()), exps, +1);
  factor_positive(q.get_den(), exps, -1);
  Factorization f;
  f.sign = q < 0 ? -1 : 1;
  for (auto& [p, e] : exps)
    if (e != 0) f.exponents.emplace_back(p, e);
  return f;
}

SquareClass::SquareClass(const Rational& q) {
  if (q == 0) throw std::invalid_argument("square class of zero is undefined");
  // q = n/d and n*d differ by the square d^2.
  const Factorization f = factor(Integer(q.get_num() * q.get_den()));
  rep_ = f.sign;
  for (const auto& [p, e] : f.exponents)
    if (e % 2 != 0) rep_ *= p;
}

SquareClass operator*(const SquareClass& x, const SquareClass& y) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.rep_.get_mpz_t(), y.rep_.get_mpz_t());
  return SquareClass::from_squarefree(Integer(x.rep_ * y.rep_ / (g * g)));
}

SquareClass squarefree_part(const Rational& q) { return SquareClass(q); }

bool is_nth_power(const Rational& q, unsigned n) {
  if (n == 0) throw std::invalid_argument("is_nth_power: n must be positive");
  if (q == 0 || n == 1) return true;
  if (q < 0 && n % 2 == 0) return false;
  const Integer num = abs(q.get_num());
  return mpz_root(Integer().get_mpz_t(), num.get_mpz_t(), n) != 0 &&
         mpz_root(Integer().get_mpz_t(), q.get_den().get_mpz_t(), n) != 0;
}

bool is_square(const Rational& q) { return is_nth_power(q, 2); }
bool is_fourth_power(const Rational& q) { return is_nth_power(q, 4); }

Rational exact_sqrt(const Rational& q) {
  if (!is_square(q)) throw std::domain_error("exact_sqrt: " + to_string(q) + " is not a rational square");
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

int valuation(const Rational& q, const Integer& p) {
  if (q == 0) throw std::invalid_argument("valuation: zero argument");
  if (!is_probable_prime(p)) throw std::invalid_argument("valuation: " + to_string(p) + " is not prime");
  Integer rest;
  const auto up = mpz_remove(rest.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t());
  const auto down = mpz_remove(rest.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t());
  return static_cast<int>(up) - static_cast<int>(down);
}

int legendre(const Integer& a, const Integer& p) {
  if (p == 2 || !is_probable_prime(p)) throw std::invalid_argument("legendre: " + to_string(p) + " is not an odd prime");
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

std::vector<unsigned> primes_below(unsigned bound) {
  std::vector<unsigned> out;
  if (bound < 3) return out;
  std::vector<bool> composite(bound, false);
  for (unsigned i = 2; i < bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (unsigned long j = static_cast<unsigned long>(i) * i; j < bound; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace pauli
