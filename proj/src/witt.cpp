#include "pauli/witt.hpp"

#include <stdexcept>

#include "pauli/binomial.hpp"

namespace pauli::witt {

using pauli::to_string;

splitting::FieldElt QuadExtElt::embed(const splitting::SplittingField& f) const {
  return f.scalar(x) + y * (f.i() * f.r());
}

std::string to_string(const QuadExtElt& u) {
  if (u.y == 0) return to_string(u.x);
  std::string ypart = (u.y == 1 ? "" : u.y == -1 ? "-" : to_string(u.y) + "*") + std::string("√-2");
  if (u.x == 0) return ypart;
  if (u.y < 0) {
    const Rational my = -u.y;
    return to_string(u.x) + " - " + (my == 1 ? "" : to_string(my) + "*") + "√-2";
  }
  return to_string(u.x) + " + " + ypart;
}

Matrix3 operator*(const Matrix3& m, const Matrix3& n) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int l = 0; l < 3; ++l) out[i][j] = out[i][j] + m[i][l] * n[l][j];
  return out;
}

Matrix3 transpose(const Matrix3& m) {
  Matrix3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out[i][j] = m[j][i];
  return out;
}

QuadExtElt determinant(const Matrix3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Matrix3 diagonal(const QuadExtElt& d0, const QuadExtElt& d1, const QuadExtElt& d2) {
  Matrix3 out{};
  out[0][0] = d0;
  out[1][1] = d1;
  out[2][2] = d2;
  return out;
}

Matrix3 identity3() { return diagonal({1, 0}, {1, 0}, {1, 0}); }

Matrix3 witt_T(const Rational& k) {
  if (auto why = binomial::pauli_violation(k)) throw std::invalid_argument("witt_T: " + *why);
  const Rational K = k + Rational(1, 2), kappa = k - Rational(1, 2);
  Matrix3 t{};
  t[0] = {QuadExtElt{1, 0}, QuadExtElt{1, 0}, QuadExtElt{0, 0}};
  t[1] = {QuadExtElt{-K / k, 0}, QuadExtElt{K / k, 0}, QuadExtElt{0, -kappa / k}};
  t[2] = {QuadExtElt{0, kappa}, QuadExtElt{0, -kappa}, QuadExtElt{-2 * K, 0}};
  const QuadExtElt half{Rational(-1, 2), 0};
  for (auto& row : t)
    for (auto& x : row) x = half * x;
  return t;
}

TCheck check_T(const Rational& k) {
  const Matrix3 t = witt_T(k);
  TCheck out;
  out.det = determinant(t);
  out.det_is_one = out.det == QuadExtElt{1, 0};
  const Matrix3 d = diagonal({2, 0}, {k, 0}, {1 / (2 * k), 0});
  out.isometry = transpose(t) * d * t == identity3();
  return out;
}

BetaRho witt_beta_rho(const splitting::SplittingField& f) {
  const Rational k = f.k();
  const Rational K = k + Rational(1, 2);
  const Rational c = K / (2 * k);
  const auto one = f.one(), r = f.r(), v2 = f.v2(), a = f.a(), abar = f.abar(), w = f.w();

  BetaRho out;
  out.beta = one - Rational(1, 2) * r - c * v2 + c * (r * v2);
  out.rho = QuadExtElt{0, -4 * k};
  out.rho_in_E = out.rho.embed(f);
  const auto diff = a - abar;
  out.sqrt_rho_beta = diff * w * (one + r * v2);

  out.factorization_holds = out.rho_in_E * out.beta == out.sqrt_rho_beta * out.sqrt_rho_beta;
  out.a_minus_abar_nonzero = !diff.is_zero();
  out.flipped_by_L_fixgroup = splitting::apply({4, 1}, out.sqrt_rho_beta) == -out.sqrt_rho_beta;
  const auto closed = (1 / (2 * k)) * ((f.scalar(2) - r) * (f.scalar(k) + (K / 2) * (r * v2)));
  out.closed_form_holds = out.beta == closed;
  return out;
}

}  // namespace pauli::witt
