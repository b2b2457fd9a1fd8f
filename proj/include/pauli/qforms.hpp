#ifndef PAULI_QFORMS_HPP
#define PAULI_QFORMS_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pauli/arith.hpp"

namespace pauli::qforms {

/// A place of Q: a prime p, or the real place.
class Place {
 public:
  static Place infinity() { return Place(); }
  /// Throws std::invalid_argument if p is not prime.
  static Place prime(const Integer& p);

  bool is_infinite() const { return p_ == 0; }
  const Integer& p() const { return p_; }

  friend bool operator==(const Place& x, const Place& y) { return x.p_ == y.p_; }
  friend bool operator<(const Place& x, const Place& y) { return x.p_ < y.p_; }

 private:
  Place() = default;
  Integer p_ = 0;  // 0 encodes the real place
};

std::string to_string(const Place& v);

/// Hilbert symbol (a, b)_v in {+1, -1}. Throws on a zero argument.
int hilbert(const Rational& a, const Rational& b, const Place& v);

/// {inf, 2} together with the odd primes dividing the square-free part of
/// any of the given values, sorted (inf first).
std::vector<Place> relevant_places(const std::vector<Rational>& values);

/// Diagonal form a x^2 + b y^2 + c z^2; coefficients stored as square-free
/// integer representatives.
class TernaryForm {
 public:
  /// Throws std::invalid_argument on a zero coefficient.
  TernaryForm(const Rational& a, const Rational& b, const Rational& c);

  const std::array<Integer, 3>& coefficients() const { return coeffs_; }
  std::vector<Rational> values() const;
  /// Evaluates the form at an integer vector.
  Integer evaluate(const std::array<Integer, 3>& x) const;

 private:
  std::array<Integer, 3> coeffs_;
};

std::string to_string(const TernaryForm& f);

int hasse_invariant(const TernaryForm& f, const Place& v);
/// (number of positive, number of negative) coefficients.
std::pair<int, int> signature(const TernaryForm& f);
SquareClass discriminant_class(const TernaryForm& f);

bool equivalent(const TernaryForm& f, const TernaryForm& g);

/// Isotropic at v: hasse(f, v) == (-1, -disc)_v.
bool locally_isotropic(const TernaryForm& f, const Place& v);
/// Represents zero nontrivially over Q.
bool isotropic(const TernaryForm& f);
/// First nonzero integer zero of f with all |x_i| <= bound, in a fixed
/// search order; nullopt if none exists in the box.
std::optional<std::array<Integer, 3>> isotropic_witness(const TernaryForm& f, unsigned bound);

/// The square classes of the values generate a subgroup of Q*/Q*^2 of order
/// 2^values.size().
bool quadratically_independent(const std::vector<Rational>& values);

/// [a1, a2, a1 a2] == [1, 1, 1]. Throws std::invalid_argument when a1, a2 are
/// dependent.
bool witt_embeddable(const Rational& a1, const Rational& a2);

/// [a, b, ab] == [1, c, c]. Throws std::invalid_argument when a, b, c are
/// dependent.
bool pauli_embeddable(const Rational& a, const Rational& b, const Rational& c);

/// (abc, -1)_v == (a, b)_v at every relevant place. Same precondition.
bool brauer_condition(const Rational& a, const Rational& b, const Rational& c);

struct Triplet {
  Integer u, v, x;  // square-free representatives
  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Every ordered triplet (u, v, x) of independent classes from
/// S_L = {a, b, ab, c, ac, bc, abc} with [u, v, uv] == [1, x, x], in a
/// deterministic order. Same precondition.
std::vector<Triplet> sl_search(const Rational& a, const Rational& b, const Rational& c);

/// The seven nonzero classes of the span of a, b, c in the order
/// a, b, ab, c, ac, bc, abc.
std::vector<SquareClass> sl_set(const Rational& a, const Rational& b, const Rational& c);

}  // namespace pauli::qforms

#endif  // PAULI_QFORMS_HPP
