#include "pauli/splitting.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pauli/binomial.hpp"
#include "pauli/linalg.hpp"

namespace pauli::splitting {

using pauli::to_string;

namespace {

struct Term {
  unsigned index;  // 2*j + e
  Rational scale;
};

// a^j w^e reduced to scale * (basis monomial).
Term reduce(unsigned j, unsigned e, const detail::FieldData& d) {
  Rational scale = 1;
  while (e >= 2) {
    e -= 2;
    j += 4;
    scale /= d.k;
  }
  while (j >= 8) {
    j -= 8;
    scale *= -d.k_squared;
  }
  return {2 * j + e, scale};
}

void require_same(const FieldElt& x, const FieldElt& y) {
  if (!x.bound() || !y.bound()) throw std::logic_error("FieldElt: operation on an unbound element");
  if (!(x.field() == y.field())) throw std::invalid_argument("FieldElt: elements belong to different fields");
}

std::string monomial_name(unsigned j, unsigned e) {
  std::string s;
  if (j == 1) s = "a";
  if (j > 1) s = "a^" + std::to_string(j);
  if (e == 1) s += s.empty() ? "w" : "*w";
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// SplittingField

SplittingField::SplittingField(const Rational& k) {
  if (auto why = binomial::pauli_violation(k))
    throw std::invalid_argument("k must be positive and neither a square nor twice a square: " + *why);
  data_ = std::make_shared<const detail::FieldData>(detail::FieldData{k, k * k});
}

FieldElt SplittingField::zero() const {
  FieldElt x(*this);
  for (auto& c : x.c_) c = 0;
  return x;
}

FieldElt SplittingField::one() const { return scalar(1); }

FieldElt SplittingField::scalar(const Rational& q) const {
  FieldElt x = zero();
  x.c_[0] = q;
  return x;
}

FieldElt SplittingField::monomial(unsigned j, unsigned e) const {
  FieldElt x = zero();
  const Term t = reduce(j, e, *data_);
  x.c_[t.index] = t.scale;
  return x;
}

FieldElt SplittingField::from_coefficients(const std::array<Rational, kDegree>& coeffs) const {
  FieldElt x(*this);
  x.c_ = coeffs;
  return x;
}

FieldElt SplittingField::a() const { return monomial(1, 0); }
FieldElt SplittingField::w() const { return monomial(0, 1); }
FieldElt SplittingField::i() const { return monomial(0, 2); }
FieldElt SplittingField::r() const { return (one() - i()) * w(); }
FieldElt SplittingField::v2() const { return -(i() * monomial(2, 1)); }
FieldElt SplittingField::abar() const { return v2() * a().inverse(); }

// ---------------------------------------------------------------------------
// FieldElt

bool FieldElt::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool FieldElt::is_rational() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& q) { return q == 0; });
}

FieldElt operator+(const FieldElt& x, const FieldElt& y) {
  require_same(x, y);
  FieldElt z = x;
  for (std::size_t n = 0; n < kDegree; ++n) z.c_[n] += y.c_[n];
  return z;
}

FieldElt operator-(const FieldElt& x, const FieldElt& y) {
  require_same(x, y);
  FieldElt z = x;
  for (std::size_t n = 0; n < kDegree; ++n) z.c_[n] -= y.c_[n];
  return z;
}

FieldElt operator-(const FieldElt& x) {
  FieldElt z = x;
  for (auto& c : z.c_) c = -c;
  return z;
}

FieldElt operator*(const Rational& q, const FieldElt& x) {
  FieldElt z = x;
  for (auto& c : z.c_) c *= q;
  return z;
}

FieldElt operator*(const FieldElt& x, const FieldElt& y) {
  require_same(x, y);
  const auto& d = *x.field_.data_;
  FieldElt z = x.field_.zero();
  for (unsigned p = 0; p < kDegree; ++p) {
    if (x.c_[p] == 0) continue;
    for (unsigned q = 0; q < kDegree; ++q) {
      if (y.c_[q] == 0) continue;
      const Term t = reduce(p / 2 + q / 2, p % 2 + q % 2, d);
      z.c_[t.index] += x.c_[p] * y.c_[q] * t.scale;
    }
  }
  return z;
}

bool operator==(const FieldElt& x, const FieldElt& y) {
  require_same(x, y);
  return x.c_ == y.c_;
}

FieldElt FieldElt::inverse() const {
  if (!bound()) throw std::logic_error("FieldElt: operation on an unbound element");
  if (is_zero()) throw std::domain_error("FieldElt: inverse of zero");
  // Column b of the multiplication-by-x matrix is x * (basis monomial b).
  linalg::Matrix m(kDegree, linalg::Vector(kDegree, Rational(0)));
  for (unsigned b = 0; b < kDegree; ++b) {
    const FieldElt col = *this * field_.monomial(b / 2, b % 2);
    for (unsigned row = 0; row < kDegree; ++row) m[row][b] = col.c_[row];
  }
  linalg::Vector rhs(kDegree, Rational(0));
  rhs[0] = 1;
  const auto sol = linalg::solve(m, rhs);
  if (!sol) throw std::logic_error("FieldElt: multiplication matrix is singular");
  FieldElt z(field_);
  std::copy(sol->begin(), sol->end(), z.c_.begin());
  return z;
}

FieldElt FieldElt::pow(unsigned n) const {
  FieldElt result = field_.one(), base = *this;
  for (; n; n >>= 1) {
    if (n & 1) result = result * base;
    base = base * base;
  }
  return result;
}

std::string to_string(const FieldElt& x) {
  std::ostringstream out;
  bool first = true;
  for (unsigned n = 0; n < kDegree; ++n) {
    const Rational& c = x.coefficients()[n];
    if (c == 0) continue;
    const std::string mono = monomial_name(n / 2, n % 2);
    const Rational mag = abs(c);
    out << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mono.empty())
      out << to_string(mag);
    else if (mag == 1)
      out << mono;
    else
      out << to_string(mag) << '*' << mono;
    first = false;
  }
  return first ? "0" : out.str();
}

// ---------------------------------------------------------------------------
// Automorphisms

bool AffineAut::is_valid() const { return t < 8 && s < 8 && s % 2 == 1 && s % 4 == (2 * t + 1) % 4; }

AffineAut AffineAut::after(const AffineAut& other) const {
  return {(s * other.t + t) % 8, (s * other.s) % 8};
}

AffineAut AffineAut::inverse() const {
  // s is its own inverse mod 8; (t, s)^-1 = (-s t, s).
  return {(8 - (s * t) % 8) % 8, s};
}

groups::Perm AffineAut::root_perm() const { return groups::affine_perm(t, s); }

std::string to_string(const AffineAut& g) { return "(" + std::to_string(g.t) + "," + std::to_string(g.s) + ")"; }

AffineAut from_root_perm(const groups::Perm& p) {
  if (p.degree() != 8) throw std::invalid_argument("from_root_perm: expected a permutation of 8 roots");
  const auto t = static_cast<unsigned>(p(0));
  const auto s = static_cast<unsigned>((p(1) + 8 - p(0)) % 8);
  AffineAut g{t, s};
  if (g.root_perm() != p) throw std::invalid_argument("from_root_perm: permutation is not affine");
  return g;
}

std::vector<AffineAut> galois_group() {
  std::vector<AffineAut> out;
  for (unsigned t = 0; t < 8; ++t)
    for (unsigned s = 1; s < 8; s += 2)
      if (AffineAut{t, s}.is_valid()) out.push_back({t, s});
  return out;
}

groups::FinGroup root_action(const std::vector<AffineAut>& auts) {
  std::vector<groups::Perm> perms;
  for (const auto& g : auts) perms.push_back(g.root_perm());
  return groups::FinGroup::from_elements(std::move(perms));
}

FieldElt apply(const AffineAut& g, const FieldElt& x) {
  if (!g.is_valid()) throw std::invalid_argument("apply: " + to_string(g) + " is not an automorphism");
  const SplittingField& f = x.field();
  FieldElt z = f.zero();
  std::array<Rational, kDegree> out{};
  for (auto& c : out) c = 0;
  for (unsigned n = 0; n < kDegree; ++n) {
    const Rational& c = x.coefficients()[n];
    if (c == 0) continue;
    const unsigned j = n / 2, e = n % 2;
    // a^j w^e -> a^j w^(t j + s e)
    const FieldElt img = f.monomial(j, (g.t * j + g.s * e) % 8);
    for (unsigned m = 0; m < kDegree; ++m)
      if (img.coefficients()[m] != 0) out[m] += c * img.coefficients()[m];
  }
  return f.from_coefficients(out);
}

bool respects_relations(const SplittingField& f, const AffineAut& g) {
  if (g.s % 2 == 0) return false;
  const FieldElt ga = f.a() * f.monomial(0, g.t % 8);
  const FieldElt gw = f.monomial(0, g.s % 8);
  const FieldElt a8 = ga.pow(8);
  return a8 == f.scalar(-(f.k() * f.k())) && gw * gw == f.scalar(1 / f.k()) * ga.pow(4);
}

std::vector<AffineAut> fixgroup(const std::vector<FieldElt>& elements) {
  std::vector<AffineAut> out;
  for (const auto& g : galois_group())
    if (std::all_of(elements.begin(), elements.end(), [&](const FieldElt& x) { return apply(g, x) == x; }))
      out.push_back(g);
  return out;
}

// ---------------------------------------------------------------------------
// Fixed fields

namespace {

bool is_closed(const std::vector<AffineAut>& h) {
  if (h.empty()) return false;
  std::set<AffineAut> set(h.begin(), h.end());
  if (!set.count(AffineAut{0, 1})) return false;
  for (const auto& x : h) {
    if (!x.is_valid()) return false;
    for (const auto& y : h)
      if (!set.count(x.after(y))) return false;
  }
  return true;
}

std::size_t orbit_size(const FieldElt& x) {
  std::vector<FieldElt> seen;
  for (const auto& g : galois_group()) {
    FieldElt y = apply(g, x);
    if (std::none_of(seen.begin(), seen.end(), [&](const FieldElt& z) { return z == y; })) seen.push_back(std::move(y));
  }
  return seen.size();
}

FieldElt combine(const SplittingField& f, const std::vector<FieldElt>& basis, const std::vector<int>& coeffs) {
  FieldElt x = f.zero();
  for (std::size_t n = 0; n < basis.size(); ++n)
    if (coeffs[n] != 0) x = x + Rational(coeffs[n]) * basis[n];
  return x;
}

// Deterministic search: single basis vectors, then b_i + m b_j with
// |m| <= bound, then the dense combination sum (n+1) b_n; the bound grows
// from 1 to 4 before giving up.
FieldElt find_primitive(const SplittingField& f, const std::vector<FieldElt>& basis, std::size_t degree) {
  if (degree == 1) return f.one();
  for (const auto& b : basis)
    if (orbit_size(b) == degree) return b;
  const std::size_t d = basis.size();
  for (int bound = 1; bound <= 4; ++bound) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i + 1; j < d; ++j)
        for (int m = -bound; m <= bound; ++m) {
          if (m == 0) continue;
          std::vector<int> c(d, 0);
          c[i] = 1;
          c[j] = m;
          const FieldElt x = combine(f, basis, c);
          if (orbit_size(x) == degree) return x;
        }
    std::vector<int> dense(d);
    for (std::size_t n = 0; n < d; ++n) dense[n] = static_cast<int>(n + 1) * bound;
    const FieldElt x = combine(f, basis, dense);
    if (orbit_size(x) == degree) return x;
  }
  throw std::logic_error("fixed_field: no primitive element found");
}

struct LabelledSubgroup {
  std::string label;
  std::vector<AffineAut> group;
};

std::vector<LabelledSubgroup> label_table(const SplittingField& f) {
  std::vector<LabelledSubgroup> out;
  for (const auto& named : named_subfields(f)) out.push_back({named.label, fixgroup(named.generators)});
  return out;
}

FixedField solve_fixed_field(const SplittingField& f, std::vector<AffineAut> h, const std::vector<LabelledSubgroup>& labels) {
  if (!is_closed(h)) throw std::invalid_argument("fixed_field: automorphism set is not a subgroup");
  std::sort(h.begin(), h.end());
  linalg::Matrix system;
  for (const auto& g : h) {
    if (g == AffineAut{0, 1}) continue;
    // (g - id) applied to every basis monomial gives the columns.
    linalg::Matrix block(kDegree, linalg::Vector(kDegree, Rational(0)));
    for (unsigned b = 0; b < kDegree; ++b) {
      const FieldElt img = apply(g, f.monomial(b / 2, b % 2));
      for (unsigned row = 0; row < kDegree; ++row) block[row][b] = img.coefficients()[row] - (row == b ? 1 : 0);
    }
    system.insert(system.end(), block.begin(), block.end());
  }
  FixedField out;
  out.subgroup = h;
  for (auto& v : linalg::nullspace(system, kDegree)) {
    std::array<Rational, kDegree> c;
    std::copy(v.begin(), v.end(), c.begin());
    out.basis.push_back(f.from_coefficients(c));
  }
  out.degree = static_cast<unsigned>(out.basis.size());
  if (out.degree * h.size() != kDegree)
    throw std::logic_error("fixed_field: dimension " + std::to_string(out.degree) + " contradicts |H| = " +
                           std::to_string(h.size()));
  out.primitive = find_primitive(f, out.basis, out.degree);
  for (const auto& l : labels)
    if (l.group == h) {
      out.label = l.label;
      break;
    }
  return out;
}

}  // namespace

FixedField fixed_field(const SplittingField& f, const std::vector<AffineAut>& subgroup) {
  return solve_fixed_field(f, subgroup, label_table(f));
}

std::vector<NamedSubfield> named_subfields(const SplittingField& f) {
  const FieldElt i = f.i(), r = f.r(), v2 = f.v2(), a = f.a(), w = f.w(), abar = f.abar();
  // Quadratic generators indexed by the bit pattern (i, r, v2) in F_2^3.
  const char* radicands[8] = {"1", "-1", "2", "-2", "k", "-k", "2k", "-2k"};
  auto root = [&](unsigned bits) {
    FieldElt x = f.one();
    if (bits & 1) x = x * i;
    if (bits & 2) x = x * r;
    if (bits & 4) x = x * v2;
    return x;
  };
  std::vector<NamedSubfield> out;
  out.push_back({"Q", {f.one()}});
  for (unsigned b = 1; b < 8; ++b) out.push_back({std::string("Q(√") + radicands[b] + ")", {root(b)}});
  for (unsigned x = 1; x < 8; ++x)
    for (unsigned y = x + 1; y < 8; ++y) {
      // Each plane {0, x, y, x^y} is listed once, from its two smallest members.
      if ((x ^ y) < y) continue;
      out.push_back({std::string("Q(√") + radicands[x] + ",√" + radicands[y] + ")", {root(x), root(y)}});
    }
  out.push_back({"L = Q(w,a²)", {w, a * a}});
  out.push_back({"Q(a)", {a}});
  out.push_back({"Q(wa)", {w * a}});
  out.push_back({"Q(a+ā)", {a + abar}});
  out.push_back({"Q(a-ā)", {a - abar}});
  out.push_back({"Q(a+wa)", {a + w * a}});
  out.push_back({"Q(a-wa)", {a - w * a}});
  out.push_back({"E = Q(w,a)", {w, a}});
  return out;
}

// ---------------------------------------------------------------------------
// Lattice

LatticeReport lattice_report(const SplittingField& f) {
  const auto labels = label_table(f);
  const auto g = root_action(galois_group());
  LatticeReport report;
  report.k = f.k();
  for (const auto& sub : groups::subgroups(g)) {
    LatticeEntry e;
    for (const auto& p : sub.group.elements()) e.subgroup.push_back(from_root_perm(p));
    std::sort(e.subgroup.begin(), e.subgroup.end());
    for (const auto& p : sub.group.generators()) e.generators.push_back(from_root_perm(p));
    e.normal = sub.normal;
    e.group_name = groups::identify(sub.group);
    e.field = solve_fixed_field(f, e.subgroup, labels);
    report.entries.push_back(std::move(e));
  }
  auto contains = [&](std::size_t big, std::size_t small) {
    const auto& b = report.entries[big].subgroup;
    const auto& s = report.entries[small].subgroup;
    return std::includes(b.begin(), b.end(), s.begin(), s.end());
  };
  const std::size_t n = report.entries.size();
  for (std::size_t lo = 0; lo < n; ++lo)
    for (std::size_t hi = 0; hi < n; ++hi) {
      if (report.entries[hi].subgroup.size() <= report.entries[lo].subgroup.size() || !contains(hi, lo)) continue;
      bool maximal = true;
      for (std::size_t mid = 0; mid < n && maximal; ++mid) {
        const auto sz = report.entries[mid].subgroup.size();
        if (sz > report.entries[lo].subgroup.size() && sz < report.entries[hi].subgroup.size() && contains(mid, lo) &&
            contains(hi, mid))
          maximal = false;
      }
      if (maximal) report.covers.emplace_back(lo, hi);
    }
  return report;
}

namespace {

std::string generator_list(const std::vector<AffineAut>& gens) {
  if (gens.empty()) return "<>";
  std::string s = "<";
  for (std::size_t n = 0; n < gens.size(); ++n) s += (n ? "," : "") + to_string(gens[n]);
  return s + ">";
}

}  // namespace

std::string lattice_text(const LatticeReport& report) {
  std::ostringstream out;
  std::size_t proper = 0, proper_normal = 0;
  for (const auto& e : report.entries)
    if (e.subgroup.size() > 1 && e.subgroup.size() < kDegree) {
      ++proper;
      if (e.normal) ++proper_normal;
    }
  out << "splitting field of X^8 + " << to_string(Rational(report.k * report.k)) << " (k = " << to_string(report.k)
      << ")\n";
  out << "subgroups: " << report.entries.size() << " total, " << proper << " proper nontrivial (" << proper_normal
      << " normal)\n";
  for (std::size_t n = 0; n < report.entries.size(); ++n) {
    const auto& e = report.entries[n];
    out << "H" << n << "  order " << e.subgroup.size() << "  " << (e.normal ? "normal    " : "non-normal") << "  "
        << e.group_name << "  gens " << generator_list(e.generators) << "  | degree " << e.field.degree << "  "
        << e.field.label.value_or("-") << "  primitive " << to_string(e.field.primitive) << '\n';
  }
  out << "covers:";
  for (const auto& [lo, hi] : report.covers) out << " H" << lo << "<H" << hi;
  out << '\n';
  return out.str();
}

std::string lattice_dot(const LatticeReport& report) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t n = 0; n < report.entries.size(); ++n) {
    const auto& e = report.entries[n];
    out << "  H" << n << " [label=\"" << generator_list(e.generators) << " " << e.group_name << "\\n"
        << e.field.label.value_or(to_string(e.field.primitive)) << "\"" << (e.normal ? "" : ", style=dashed")
        << "];\n";
  }
  for (const auto& [lo, hi] : report.covers) out << "  H" << lo << " -> H" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::vector<FieldElt> root_product(const SplittingField& f) {
  std::vector<FieldElt> poly{f.one()};
  for (unsigned m = 0; m < 8; ++m) {
    const FieldElt root = f.a() * f.monomial(0, m);
    std::vector<FieldElt> next(poly.size() + 1, f.zero());
    for (std::size_t n = 0; n < poly.size(); ++n) {
      next[n + 1] = next[n + 1] + poly[n];
      next[n] = next[n] - root * poly[n];
    }
    poly = std::move(next);
  }
  return poly;
}

}  // namespace pauli::splitting
