#ifndef PAULI_LINALG_HPP
#define PAULI_LINALG_HPP

#include <optional>
#include <vector>

#include "pauli/arith.hpp"

namespace pauli::linalg {

using Vector = std::vector<Rational>;
using Matrix = std::vector<Vector>;  // row-major

Matrix identity(std::size_t n);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {x : m x = 0}, one vector per free column, normalized so the free
/// coordinate is 1.
std::vector<Vector> nullspace(Matrix m, std::size_t columns);

/// Solves m x = rhs; nullopt when inconsistent. Free variables are set to 0.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);

}  // namespace pauli::linalg

#endif  // PAULI_LINALG_HPP
