#ifndef PAULI_WITT_HPP
#define PAULI_WITT_HPP

#include <array>
#include <string>

#include "pauli/arith.hpp"
#include "pauli/splitting.hpp"

namespace pauli::witt {

/// x + y*sqrt(-2).
struct QuadExtElt {
  Rational x = 0;
  Rational y = 0;

  QuadExtElt conjugate() const { return {x, -y}; }
  /// Image in E, with sqrt(-2) = i*r.
  splitting::FieldElt embed(const splitting::SplittingField& f) const;

  friend QuadExtElt operator+(const QuadExtElt& u, const QuadExtElt& v) { return {u.x + v.x, u.y + v.y}; }
  friend QuadExtElt operator-(const QuadExtElt& u, const QuadExtElt& v) { return {u.x - v.x, u.y - v.y}; }
  friend QuadExtElt operator-(const QuadExtElt& u) { return {-u.x, -u.y}; }
  friend QuadExtElt operator*(const QuadExtElt& u, const QuadExtElt& v) {
    return {u.x * v.x - 2 * u.y * v.y, u.x * v.y + u.y * v.x};
  }
  friend bool operator==(const QuadExtElt& u, const QuadExtElt& v) { return u.x == v.x && u.y == v.y; }
};

std::string to_string(const QuadExtElt& u);

using Matrix3 = std::array<std::array<QuadExtElt, 3>, 3>;

Matrix3 operator*(const Matrix3& m, const Matrix3& n);
Matrix3 transpose(const Matrix3& m);
QuadExtElt determinant(const Matrix3& m);
Matrix3 diagonal(const QuadExtElt& d0, const QuadExtElt& d1, const QuadExtElt& d2);
Matrix3 identity3();

/// The change of basis taking [2, k, 1/(2k)] to [1, 1, 1] over Q(sqrt(-2)):
/// T = -1/2 [[1, 1, 0], [-K/k, K/k, -kappa*s/k], [kappa*s, -kappa*s, -2K]]
/// with K = k + 1/2, kappa = k - 1/2, s = sqrt(-2).
/// Throws std::invalid_argument unless k satisfies the Pauli condition.
Matrix3 witt_T(const Rational& k);

struct TCheck {
  QuadExtElt det;
  bool det_is_one = false;
  bool isometry = false;  // T^t diag(2, k, 1/(2k)) T == I
};

TCheck check_T(const Rational& k);

struct BetaRho {
  splitting::FieldElt beta;
  QuadExtElt rho;
  splitting::FieldElt rho_in_E;
  splitting::FieldElt sqrt_rho_beta;  // (a - abar) w (1 + r v2)

  // Certificate.
  bool factorization_holds = false;  // rho*beta == sqrt_rho_beta^2
  bool a_minus_abar_nonzero = false;
  bool flipped_by_L_fixgroup = false;  // (4,1) sends sqrt_rho_beta to its negative
  bool closed_form_holds = false;      // beta == (2 - r)(k + K r v2 / 2) / (2k)

  bool all() const { return factorization_holds && a_minus_abar_nonzero && flipped_by_L_fixgroup && closed_form_holds; }
};

/// beta = 1 - r/2 - (K/2k) v2 + (K/2k) r v2 and rho = -4k sqrt(-2), with the
/// checks above evaluated exactly in E.
BetaRho witt_beta_rho(const splitting::SplittingField& f);

}  // namespace pauli::witt

#endif  // PAULI_WITT_HPP
