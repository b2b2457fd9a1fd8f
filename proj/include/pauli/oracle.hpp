#ifndef PAULI_ORACLE_HPP
#define PAULI_ORACLE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pauli/arith.hpp"
#include "pauli/binomial.hpp"
#include "pauli/groups.hpp"

namespace pauli::oracle {

/// Partition of 8, parts ascending.
using CycleType = std::vector<unsigned>;

std::string to_string(const CycleType& t);
bool has_equal_parts(const CycleType& t);

/// Polynomials over F_p, coefficients constant term first, trailing zeros
/// trimmed. p must be below 2^32.
namespace fp {
using Poly = std::vector<std::uint64_t>;
Poly trim(Poly f);
Poly mod(Poly f, const Poly& g, std::uint64_t p);
Poly mul_mod(const Poly& f, const Poly& g, const Poly& m, std::uint64_t p);
Poly gcd(Poly f, Poly g, std::uint64_t p);
Poly divide(Poly f, const Poly& g, std::uint64_t p);  // exact quotient
std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p);
}  // namespace fp

/// c reduced mod p; throws if p divides the denominator.
std::uint64_t reduce_mod(const Rational& c, std::uint64_t p);

/// Degrees of the irreducible factors of X^8 + c over F_p by distinct-degree
/// factorization. Throws std::invalid_argument if p is not an odd prime below
/// 2^32 or divides num(c) or den(c).
CycleType factor_mod_p(const Rational& c, std::uint64_t p);

/// Exact proportion of each cycle type among the elements of G. Throws
/// unless G acts on 8 points.
std::map<CycleType, Rational> group_cycle_types(const groups::FinGroup& g);

struct Census {
  Rational c;
  std::uint64_t bound = 0;
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> skipped;
};

/// Factors X^8 + c modulo every odd prime p < bound with p not dividing
/// num(c) den(c). Requires bound >= 100 and c != 0.
Census census(const Rational& c, std::uint64_t bound);
std::string to_string(const Census& census);

struct Verdict {
  bool pass = false;
  std::vector<CycleType> unexpected;  // observed but absent from the model
  CycleType worst_type;
  Rational worst_deviation = 0;  // max |observed - model| over all types seen on either side
  std::string reason;
};

/// PASS iff every observed type occurs in the model and every type's
/// observed frequency lies within tolerance of its model proportion (types
/// of the model that were never observed count with frequency 0). Throws
/// std::invalid_argument when census.total < 500.
Verdict consistent(const Census& census, const groups::FinGroup& model, const Rational& tolerance);

struct StockModel {
  std::string name;
  std::optional<groups::FinGroup> model;  // absent when no faithful transitive action on 8 points exists
  std::string note;
};

/// K8, D16, QD16, Pauli, B32 as affine subgroups of Hol(C8), plus C16, C8xC2
/// and Q8xC2, which have no transitive faithful model on 8 points.
const std::vector<StockModel>& stock_models();

/// Verdict against a stock model; structurally excluded models always FAIL.
Verdict consistent(const Census& census, const StockModel& stock, const Rational& tolerance);

/// Name of the stock model matching a classifier tag, or nullopt when
/// reducible.
std::optional<std::string> predicted_model(const binomial::GaloisTag& tag);

}  // namespace pauli::oracle

#endif  // PAULI_ORACLE_HPP
