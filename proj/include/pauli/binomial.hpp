#ifndef PAULI_BINOMIAL_HPP
#define PAULI_BINOMIAL_HPP

#include <optional>
#include <string>

#include "pauli/arith.hpp"
#include "pauli/groups.hpp"

namespace pauli::binomial {

// All operations take the constant term c of X^n + c.

enum class GaloisKind { Reducible, K8, D16, QD16, Pauli, B32 };

struct GaloisTag {
  GaloisKind kind = GaloisKind::Reducible;
  std::optional<unsigned> degree;  // splitting-field degree; absent when reducible

  std::string name() const;
  /// Name groups::identify assigns to the tagged group ("" for Reducible).
  std::string group_name() const;
  friend bool operator==(const GaloisTag&, const GaloisTag&) = default;
};

GaloisTag make_tag(GaloisKind kind);
std::string to_string(GaloisKind kind);

struct IrreducibilityReport {
  bool irreducible = true;
  std::string clause;  // which condition failed, or a summary of those that hold
};

IrreducibilityReport irreducibility_report(unsigned n, const Rational& c);
bool is_irreducible_binomial(unsigned n, const Rational& c);

/// k > 0 is neither a rational square nor twice one.
bool pauli_condition(const Rational& k);
/// Names the violated clause, or nullopt when the condition holds.
std::optional<std::string> pauli_violation(const Rational& k);

struct Classification {
  GaloisTag tag;
  std::string branch;
  IrreducibilityReport irreducibility;
};

Classification classify_octic_detailed(const Rational& c);
GaloisTag classify_octic(const Rational& c);

/// c^2 is an n-th power in Q.
bool schinzel_abelian(unsigned n, const Rational& c);

/// Permutation model of the tagged group on the eight roots a*w^m, as affine
/// maps m -> s*m + t inside Hol(C8).
groups::FinGroup octic_model(GaloisKind kind);

/// The tagged group has order dividing 32 and occurs as a full subgroup of
/// Hol(C8) (both projections onto C8 and Aut(C8) surjective).
bool full_subgroup_bound(const GaloisTag& tag);

}  // namespace pauli::binomial

#endif  // PAULI_BINOMIAL_HPP
