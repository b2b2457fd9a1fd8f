#ifndef PAULI_GROUPS_HPP
#define PAULI_GROUPS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace pauli::groups {

inline constexpr std::size_t kMaxDegree = 64;
inline constexpr std::size_t kMaxLatticeOrder = 64;

/// A permutation of {0, ..., n-1}. Products compose right to left:
/// (p * q)(i) = p(q(i)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::size_t operator()(std::size_t point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  Perm inverse() const;
  bool is_identity() const;
  unsigned order() const;
  /// Cycle lengths (fixed points included), ascending.
  std::vector<unsigned> cycle_type() const;

  friend Perm operator*(const Perm& lhs, const Perm& rhs);
  friend auto operator<=>(const Perm&, const Perm&) = default;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> images_;
};

std::string to_string(const Perm& p);

/// A finite permutation group, stored as its full sorted element list.
class FinGroup {
 public:
  /// Smallest subgroup of Sym(degree) containing the generators.
  static FinGroup closure(const std::vector<Perm>& generators);
  static FinGroup closure(const std::vector<Perm>& generators, std::size_t degree);
  /// Wraps an explicit element set; throws unless it is closed and contains
  /// the identity. A small generating set is chosen greedily.
  static FinGroup from_elements(std::vector<Perm> elements);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& generators() const { return generators_; }

  bool contains(const Perm& p) const;
  /// Position of p in elements(); throws if absent.
  std::size_t index_of(const Perm& p) const;
  bool is_abelian() const;
  bool is_subgroup_of(const FinGroup& other) const;
  bool is_transitive() const;

  friend bool operator==(const FinGroup& a, const FinGroup& b) { return a.elements_ == b.elements_; }

 private:
  std::size_t degree_ = 0;
  std::vector<Perm> elements_;
  std::vector<Perm> generators_;
};

struct Subgroup {
  FinGroup group;
  bool normal = false;
};

/// Every subgroup of G (trivial and G included), ordered by size and then
/// by element list. Requires |G| <= 64.
std::vector<Subgroup> subgroups(const FinGroup& g);

bool is_normal(const FinGroup& g, const FinGroup& n);
FinGroup center(const FinGroup& g);
FinGroup derived_subgroup(const FinGroup& g);

/// Elementary divisors of an abelian group, descending (e.g. {4, 2} for C4 x C2).
std::vector<unsigned> abelian_invariants(const FinGroup& g);
std::string abelian_name(const std::vector<unsigned>& invariants);

/// G/N acting on the cosets of N; throws if N is not a normal subgroup.
FinGroup quotient(const FinGroup& g, const FinGroup& n);
std::string quotient_type(const FinGroup& g, const FinGroup& n);

struct Fingerprint {
  std::size_t order = 0;
  std::map<unsigned, unsigned> element_orders;
  std::vector<unsigned> center_type;
  std::vector<unsigned> abelianization_type;
  std::map<std::pair<std::size_t, bool>, unsigned> subgroup_counts;  // (order, normal) -> count
  bool has_q8_subgroup = false;
  bool has_element_of_order_8 = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FinGroup& g);
std::string to_string(const Fingerprint& f);

/// The three order-16 conditions that single out the Pauli group among the
/// fourteen groups of that order.
struct PauliCriteria {
  bool no_element_of_order_8 = false;
  bool has_non_normal_subgroup = false;
  bool has_q8_subgroup = false;
  bool all() const { return no_element_of_order_8 && has_non_normal_subgroup && has_q8_subgroup; }
};

PauliCriteria pauli_criteria(const FinGroup& g);

/// Quaternion group test: order 8, non-abelian, a single involution.
bool is_q8(const FinGroup& g);

/// Canonical name of a group of order <= 32. Abelian groups are named by
/// their invariants; non-abelian groups of order 6, 8 and 16 by catalog;
/// order 32 recognizes Hol(C8). Throws std::out_of_range otherwise.
std::string identify(const FinGroup& g);

/// 2x2 matrix over Z[i]; entry (re, im).
struct GaussianMatrix {
  std::array<std::array<std::pair<int, int>, 2>, 2> entries{};

  friend GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b);
  friend auto operator<=>(const GaussianMatrix&, const GaussianMatrix&) = default;
  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;
};

GaussianMatrix pauli_x();
GaussianMatrix pauli_y();
GaussianMatrix pauli_z();

/// Matrix closure of the given generators (finite for the groups we use).
std::vector<GaussianMatrix> matrix_closure(const std::vector<GaussianMatrix>& generators);

/// Left-regular permutation images of `generators` acting on `group_elements`.
std::vector<Perm> regular_images(const std::vector<GaussianMatrix>& group_elements,
                                 const std::vector<GaussianMatrix>& generators);

/// The 16-element group <X, Y, Z> in its regular permutation representation.
FinGroup pauli_matrix_group();

/// Affine maps m -> s*m + t on Z/8 with s odd: Hol(C8), order 32.
Perm affine_perm(unsigned t, unsigned s);
FinGroup hol_c8_model();

struct NamedGroup {
  std::string name;
  FinGroup group;
};

/// Stock models (regular representations) of the 14 groups of order 16.
const std::vector<NamedGroup>& order16_catalog();
/// Stock models of the 5 groups of order 8.
const std::vector<NamedGroup>& order8_catalog();

/// Regular representation of a group given by a multiplication table on
/// {0..n-1}, with 0 as identity.
FinGroup group_from_table(std::size_t n, const std::vector<std::vector<std::size_t>>& table);

}  // namespace pauli::groups

#endif  // PAULI_GROUPS_HPP
