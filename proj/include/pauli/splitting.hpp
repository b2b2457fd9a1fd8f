#ifndef PAULI_SPLITTING_HPP
#define PAULI_SPLITTING_HPP

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pauli/arith.hpp"
#include "pauli/groups.hpp"

namespace pauli::splitting {

// Arithmetic in the splitting field E = Q(w, a) of X^8 + k^2, where a is a
// root and w a primitive 8th root of unity. E has Q-basis a^j * w^e
// (j < 8, e < 2) with reduction rules
//
//   a^8 = -k^2,   w^2 = a^4 / k.
//
// Derived elements: i = a^4/k, r = sqrt(2) = (1 - i) w, v2 = sqrt(k) = -i a^2 w,
// and the complex conjugate of a, abar = v2 / a.

inline constexpr std::size_t kDegree = 16;

class FieldElt;

namespace detail {
struct FieldData {
  Rational k;
  Rational k_squared;
};
}  // namespace detail

/// Immutable handle to the field for one admissible k; cheap to copy.
class SplittingField {
 public:
  /// Throws std::invalid_argument naming the violated condition when k <= 0,
  /// k is a square, or k is twice a square.
  explicit SplittingField(const Rational& k);

  const Rational& k() const { return data_->k; }

  FieldElt zero() const;
  FieldElt one() const;
  FieldElt scalar(const Rational& q) const;
  /// a^j w^e for any j >= 0, e >= 0 (reduced).
  FieldElt monomial(unsigned j, unsigned e) const;
  FieldElt from_coefficients(const std::array<Rational, kDegree>& coeffs) const;

  FieldElt a() const;
  FieldElt w() const;
  FieldElt i() const;
  FieldElt r() const;
  FieldElt v2() const;
  FieldElt abar() const;

  friend bool operator==(const SplittingField& x, const SplittingField& y) { return x.data_ == y.data_; }

 private:
  friend class FieldElt;
  friend FieldElt operator*(const FieldElt& x, const FieldElt& y);
  SplittingField() = default;
  std::shared_ptr<const detail::FieldData> data_;
};

/// Element of E: 16 rational coefficients, index 2*j + e for a^j w^e.
class FieldElt {
 public:
  /// Unbound element; only assignment and bound() are meaningful.
  FieldElt() = default;

  bool bound() const { return field_.data_ != nullptr; }
  const SplittingField& field() const { return field_; }
  const Rational& coeff(unsigned j, unsigned e) const { return c_[2 * j + e]; }
  const std::array<Rational, kDegree>& coefficients() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;

  FieldElt inverse() const;
  FieldElt pow(unsigned n) const;

  friend FieldElt operator+(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator-(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator-(const FieldElt& x);
  friend FieldElt operator*(const FieldElt& x, const FieldElt& y);
  friend FieldElt operator*(const Rational& q, const FieldElt& x);
  friend FieldElt operator/(const FieldElt& x, const FieldElt& y) { return x * y.inverse(); }
  friend bool operator==(const FieldElt& x, const FieldElt& y);

 private:
  friend class SplittingField;
  explicit FieldElt(SplittingField f) : field_(std::move(f)) {}

  SplittingField field_;
  std::array<Rational, kDegree> c_{};
};

std::string to_string(const FieldElt& x);

/// The automorphism a -> a w^t, w -> w^s. Valid iff s is odd and
/// s = 2t + 1 (mod 4).
struct AffineAut {
  unsigned t = 0;
  unsigned s = 1;

  bool is_valid() const;
  /// this o other: (t2, s2) o (t1, s1) = (s2 t1 + t2, s2 s1).
  AffineAut after(const AffineAut& other) const;
  AffineAut inverse() const;
  /// Induced permutation of the roots a w^m: m -> s m + t.
  groups::Perm root_perm() const;

  friend auto operator<=>(const AffineAut&, const AffineAut&) = default;
  friend bool operator==(const AffineAut&, const AffineAut&) = default;
};

std::string to_string(const AffineAut& g);
AffineAut from_root_perm(const groups::Perm& p);

/// All 16 valid automorphisms, sorted.
std::vector<AffineAut> galois_group();
/// The Galois group as a permutation group on the eight roots.
groups::FinGroup root_action(const std::vector<AffineAut>& auts);

FieldElt apply(const AffineAut& g, const FieldElt& x);

/// Checks that g respects both reduction rules, i.e. induces a ring map.
bool respects_relations(const SplittingField& f, const AffineAut& g);

/// {g : g(x) = x for every x in elements}.
std::vector<AffineAut> fixgroup(const std::vector<FieldElt>& elements);

struct FixedField {
  std::vector<AffineAut> subgroup;
  unsigned degree = 0;
  std::vector<FieldElt> basis;
  FieldElt primitive;
  std::optional<std::string> label;
};

/// Fixed field of H; throws std::invalid_argument if H is not closed.
FixedField fixed_field(const SplittingField& f, const std::vector<AffineAut>& subgroup);

/// Named subfields: label -> generators. Quadratic Q(sqrt d) for
/// d in {-1, 2, -2, k, -k, 2k, -2k}, the seven biquadratic fields, L, the
/// six non-normal octics, plus Q and E.
struct NamedSubfield {
  std::string label;
  std::vector<FieldElt> generators;
};
std::vector<NamedSubfield> named_subfields(const SplittingField& f);

struct LatticeEntry {
  std::vector<AffineAut> subgroup;
  std::vector<AffineAut> generators;
  bool normal = false;
  std::string group_name;
  FixedField field;
};

struct LatticeReport {
  Rational k;
  std::vector<LatticeEntry> entries;              // ordered by subgroup order
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (smaller, larger) maximal inclusions
};

LatticeReport lattice_report(const SplittingField& f);
std::string lattice_text(const LatticeReport& report);
std::string lattice_dot(const LatticeReport& report);

/// Coefficients (constant term first) of prod_m (X - a w^m), computed in E.
std::vector<FieldElt> root_product(const SplittingField& f);

}  // namespace pauli::splitting

#endif  // PAULI_SPLITTING_HPP
