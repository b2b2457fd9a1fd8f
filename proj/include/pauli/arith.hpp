#ifndef PAULI_ARITH_HPP
#define PAULI_ARITH_HPP

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauli {

using Integer = mpz_class;

/// Exact rational number. GMP keeps it in lowest terms with a positive
/// denominator as long as every value is built through make_rational or
/// parse_rational (or arithmetic on such values).
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den = 1);

/// Accepts "n" or "p/q" with an optional sign; no whitespace, no decimals.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// sign * prod p^e. Exponents may be negative when the input was a rational.
struct Factorization {
  int sign = 1;
  std::vector<std::pair<Integer, int>> exponents;  // primes strictly increasing

  Rational value() const;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

bool is_probable_prime(const Integer& n);

/// Trial division below 10^6, then Pollard rho (Brent variant) on the cofactor.
Factorization factor(const Integer& n);
Factorization factor(const Rational& q);

/// Class of q in Q*/Q*^2, represented by the signed square-free integer t with
/// q/t a rational square.
class SquareClass {
 public:
  SquareClass() = default;
  explicit SquareClass(const Rational& q);

  const Integer& representative() const { return rep_; }
  bool is_trivial() const { return rep_ == 1; }
  Rational value() const { return Rational(rep_); }

  friend SquareClass operator*(const SquareClass& x, const SquareClass& y);
  friend bool operator==(const SquareClass& x, const SquareClass& y) {
    return x.rep_ == y.rep_;
  }
  friend bool operator<(const SquareClass& x, const SquareClass& y) {
    return x.rep_ < y.rep_;
  }

 private:
  static SquareClass from_squarefree(Integer t) {
    SquareClass c;
    c.rep_ = std::move(t);
    return c;
  }
  Integer rep_ = 1;
};

SquareClass squarefree_part(const Rational& q);

bool is_square(const Rational& q);
bool is_fourth_power(const Rational& q);
/// True iff q = x^n for some rational x (n >= 1).
bool is_nth_power(const Rational& q, unsigned n);
/// The positive rational square root; throws if q is not a square.
Rational exact_sqrt(const Rational& q);

/// v_p(q) for prime p and q != 0.
int valuation(const Rational& q, const Integer& p);
/// Legendre symbol (a/p) for an odd prime p.
int legendre(const Integer& a, const Integer& p);

std::vector<unsigned> primes_below(unsigned bound);

}  // namespace pauli

#endif  // PAULI_ARITH_HPP
