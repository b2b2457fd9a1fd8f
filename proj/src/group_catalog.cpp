#include <functional>

#include "pauli/groups.hpp"

namespace pauli::groups {

namespace {

using Table = std::vector<std::vector<std::size_t>>;

Table make_table(std::size_t n, const std::function<std::size_t(std::size_t, std::size_t)>& mul) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = mul(a, b);
  return t;
}

Table cyclic(std::size_t n) {
  return make_table(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; });
}

Table direct(const Table& x, const Table& y) {
  const std::size_t nx = x.size(), ny = y.size();
  return make_table(nx * ny, [&](std::size_t a, std::size_t b) {
    return x[a / ny][b / ny] * ny + y[a % ny][b % ny];
  });
}

// Z/m x| Z/n where the generator of Z/n acts on Z/m by multiplication by u.
// Element (i, j) is stored as i + m*j.
Table semidirect(std::size_t m, std::size_t n, std::size_t u) {
  std::vector<std::size_t> upow(n, 1);
  for (std::size_t j = 1; j < n; ++j) upow[j] = upow[j - 1] * u % m;
  return make_table(m * n, [=](std::size_t a, std::size_t b) {
    const std::size_t i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
    return (i1 + upow[j1] * i2) % m + m * ((j1 + j2) % n);
  });
}

// Dicyclic group <x, y | x^m = 1, y^2 = x^(m/2), y x y^-1 = x^-1>, order 2m.
Table dicyclic(std::size_t m) {
  return make_table(2 * m, [=](std::size_t a, std::size_t b) {
    const std::size_t i1 = a % m, j1 = a / m, i2 = b % m, j2 = b / m;
    if (j1 == 0) return (i1 + i2) % m + m * j2;
    if (j2 == 0) return (i1 + m - i2) % m + m;
    return (i1 + m - i2 + m / 2) % m;
  });
}

// <a, b, c | a^4 = b^2 = c^2 = 1, ab = ba, bc = cb, c a c^-1 = ab>.
// Element a^x b^y c^z stored as x + 4y + 8z.
Table c4c2_by_c2() {
  return make_table(16, [](std::size_t p, std::size_t q) {
    std::size_t x1 = p % 4, y1 = p / 4 % 2, z1 = p / 8;
    const std::size_t x2 = q % 4, y2 = q / 4 % 2, z2 = q / 8;
    // conjugating a^x2 b^y2 by c^z1 gives a^x2 b^(y2 + z1*x2)
    const std::size_t y2c = (y2 + z1 * x2) % 2;
    x1 = (x1 + x2) % 4;
    y1 = (y1 + y2c) % 2;
    z1 = (z1 + z2) % 2;
    return x1 + 4 * y1 + 8 * z1;
  });
}

// C4 o D8: pairs (c, d) with c in {0, 1} and d in D8 = Z4 x|_{-1} Z2, where the
// central element (2, r^2) is identified with the identity.
Table central_product_c4_d8() {
  const Table d8 = semidirect(4, 2, 3);
  const std::size_t r2 = 2;  // r^2 in the semidirect encoding
  return make_table(16, [&](std::size_t p, std::size_t q) {
    const std::size_t c1 = p / 8, d1 = p % 8, c2 = q / 8, d2 = q % 8;
    std::size_t c = c1 + c2, d = d8[d1][d2];
    if (c >= 2) {
      c -= 2;
      d = d8[d][r2];
    }
    return c * 8 + d;
  });
}

FinGroup build(const Table& t) { return group_from_table(t.size(), t); }

}  // namespace

const std::vector<NamedGroup>& order16_catalog() {
  static const std::vector<NamedGroup> catalog = [] {
    const Table c2 = cyclic(2), c4 = cyclic(4), c8 = cyclic(8);
    const Table d8 = semidirect(4, 2, 3), q8 = dicyclic(4);
    return std::vector<NamedGroup>{
        {"C16", build(cyclic(16))},
        {"C8×C2", build(direct(c8, c2))},
        {"C4×C4", build(direct(c4, c4))},
        {"C4×C2×C2", build(direct(direct(c4, c2), c2))},
        {"E16", build(direct(direct(c2, c2), direct(c2, c2)))},
        {"D16", build(semidirect(8, 2, 7))},
        {"QD16", build(semidirect(8, 2, 3))},
        {"M4(2)", build(semidirect(8, 2, 5))},
        {"Q16", build(dicyclic(8))},
        {"C4⋊C4", build(semidirect(4, 4, 3))},
        {"(C4×C2)⋊C2", build(c4c2_by_c2())},
        {"D8×C2", build(direct(d8, c2))},
        {"Q8×C2", build(direct(q8, c2))},
        {"Pauli", build(central_product_c4_d8())},
    };
  }();
  return catalog;
}

const std::vector<NamedGroup>& order8_catalog() {
  static const std::vector<NamedGroup> catalog = [] {
    const Table c2 = cyclic(2);
    return std::vector<NamedGroup>{
        {"C8", build(cyclic(8))},
        {"C4×C2", build(direct(cyclic(4), c2))},
        {"E8", build(direct(direct(c2, c2), c2))},
        {"D8", build(semidirect(4, 2, 3))},
        {"Q8", build(dicyclic(4))},
    };
  }();
  return catalog;
}

}  // namespace pauli::groups
