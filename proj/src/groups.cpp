#include "pauli/groups.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pauli::groups {

// ---------------------------------------------------------------------------
// Perm

Perm::Perm(std::vector<std::uint8_t> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) throw std::invalid_argument("Perm: degree exceeds 64");
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw std::invalid_argument("Perm: images are not a bijection");
    seen[x] = true;
  }
}

Perm Perm::identity(std::size_t degree) {
  std::vector<std::uint8_t> im(degree);
  std::iota(im.begin(), im.end(), std::uint8_t{0});
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint8_t>(i);
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

unsigned Perm::order() const {
  unsigned result = 1;
  for (auto len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<unsigned> Perm::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<unsigned> lengths;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t x = i; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

Perm operator*(const Perm& lhs, const Perm& rhs) {
  if (lhs.degree() != rhs.degree()) throw std::invalid_argument("Perm: degree mismatch in product");
  std::vector<std::uint8_t> im(rhs.images_.size());
  for (std::size_t i = 0; i < im.size(); ++i) im[i] = lhs.images_[rhs.images_[i]];
  Perm p;
  p.images_ = std::move(im);
  return p;
}

std::string to_string(const Perm& p) {
  std::ostringstream out;
  bool any = false;
  std::vector<bool> seen(p.degree(), false);
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out << '(';
    for (std::size_t x = i; !seen[x]; x = p(x)) {
      seen[x] = true;
      out << x << (seen[p(x)] ? "" : " ");
    }
    out << ')';
    any = true;
  }
  return any ? out.str() : "()";
}

// ---------------------------------------------------------------------------
// FinGroup

FinGroup FinGroup::closure(const std::vector<Perm>& generators) {
  if (generators.empty()) throw std::invalid_argument("closure: need a generator or an explicit degree");
  return closure(generators, generators.front().degree());
}

FinGroup FinGroup::closure(const std::vector<Perm>& generators, std::size_t degree) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw std::invalid_argument("closure: generators act on different point sets");
  std::set<Perm> seen{Perm::identity(degree)};
  std::vector<Perm> frontier{Perm::identity(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        Perm y = g * x;
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  FinGroup out;
  out.degree_ = degree;
  out.elements_.assign(seen.begin(), seen.end());
  for (const auto& g : generators)
    if (!g.is_identity() && std::find(out.generators_.begin(), out.generators_.end(), g) == out.generators_.end())
      out.generators_.push_back(g);
  return out;
}

FinGroup FinGroup::from_elements(std::vector<Perm> elements) {
  if (elements.empty()) throw std::invalid_argument("from_elements: empty set");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t degree = elements.front().degree();
  if (!elements.front().is_identity()) throw std::invalid_argument("from_elements: identity missing");
  for (const auto& x : elements)
    for (const auto& y : elements)
      if (!std::binary_search(elements.begin(), elements.end(), x * y))
        throw std::invalid_argument("from_elements: set is not closed under composition");
  FinGroup out;
  out.degree_ = degree;
  out.elements_ = std::move(elements);
  // Greedy generating set: take the first element outside the current span.
  std::set<Perm> span{Perm::identity(degree)};
  for (const auto& x : out.elements_) {
    if (span.count(x)) continue;
    out.generators_.push_back(x);
    span = [&] {
      const auto sub = closure(out.generators_, degree);
      return std::set<Perm>(sub.elements().begin(), sub.elements().end());
    }();
  }
  return out;
}

bool FinGroup::contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

std::size_t FinGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::invalid_argument("index_of: element not in group");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FinGroup::is_abelian() const {
  for (const auto& a : generators_)
    for (const auto& b : generators_)
      if (a * b != b * a) return false;
  return true;
}

bool FinGroup::is_subgroup_of(const FinGroup& other) const {
  if (degree_ != other.degree_ || other.order() % order() != 0) return false;
  return std::all_of(elements_.begin(), elements_.end(), [&](const Perm& p) { return other.contains(p); });
}

bool FinGroup::is_transitive() const {
  if (degree_ == 0) return true;
  std::vector<bool> orbit(degree_, false);
  for (const auto& g : elements_) orbit[g(0)] = true;
  return std::all_of(orbit.begin(), orbit.end(), [](bool b) { return b; });
}

// ---------------------------------------------------------------------------
// Cayley-table machinery for subgroup work. Subsets are 64-bit masks over
// element indices; index 0 is the identity because it sorts first.

namespace {

using Mask = std::uint64_t;

struct Table {
  std::size_t n = 0;
  std::vector<std::vector<std::uint8_t>> mul;
  std::vector<std::uint8_t> inv;
  std::vector<unsigned> order;
  std::vector<std::uint8_t> gens;

  explicit Table(const FinGroup& g) : n(g.order()), mul(n, std::vector<std::uint8_t>(n)), inv(n), order(n) {
    if (n > kMaxLatticeOrder) throw std::invalid_argument("subgroup lattice: group order exceeds 64");
    const auto& el = g.elements();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mul[i][j] = static_cast<std::uint8_t>(g.index_of(el[i] * el[j]));
      inv[i] = static_cast<std::uint8_t>(g.index_of(el[i].inverse()));
      order[i] = el[i].order();
    }
    for (const auto& x : g.generators()) gens.push_back(static_cast<std::uint8_t>(g.index_of(x)));
  }

  Mask closure(Mask generators) const {
    Mask result = 1;
    std::vector<std::uint8_t> gen_list, frontier{0};
    for (std::size_t i = 0; i < n; ++i)
      if (generators >> i & 1) gen_list.push_back(static_cast<std::uint8_t>(i));
    while (!frontier.empty()) {
      std::vector<std::uint8_t> next;
      for (auto x : frontier)
        for (auto g : gen_list) {
          const auto y = mul[x][g];
          if (!(result >> y & 1)) {
            result |= Mask{1} << y;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    return result;
  }

  bool normal(Mask h) const {
    for (auto g : gens)
      for (std::size_t x = 0; x < n; ++x)
        if ((h >> x & 1) && !(h >> mul[mul[g][x]][inv[g]] & 1)) return false;
    return true;
  }

  std::vector<Mask> all_subgroups() const {
    std::set<Mask> found;
    std::vector<Mask> cyclic;
    for (std::size_t i = 0; i < n; ++i) {
      const Mask c = closure(Mask{1} << i);
      if (found.insert(c).second) cyclic.push_back(c);
    }
    std::vector<Mask> queue(found.begin(), found.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Mask h = queue[head];
      for (Mask c : cyclic) {
        if ((c & ~h) == 0) continue;
        const Mask j = closure(h | c);
        if (found.insert(j).second) queue.push_back(j);
      }
    }
    return {found.begin(), found.end()};
  }

  FinGroup subgroup(const FinGroup& g, Mask m) const {
    std::vector<Perm> el;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) el.push_back(g.elements()[i]);
    return FinGroup::from_elements(std::move(el));
  }
};

Mask mask_of(const FinGroup& g, const FinGroup& sub) {
  Mask m = 0;
  for (const auto& p : sub.elements()) m |= Mask{1} << g.index_of(p);
  return m;
}

// Elementary divisors from a count of elements whose order divides each prime power.
std::vector<unsigned> invariants_from_orders(const std::vector<unsigned>& orders) {
  const std::size_t n = orders.size();
  std::vector<unsigned> result;
  std::size_t rest = n;
  for (unsigned p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    std::vector<unsigned> ranks;  // ranks[i] = # cyclic factors of order >= p^(i+1)
    std::size_t prev = 1;
    for (unsigned long pk = p;; pk *= p) {
      const auto cnt = static_cast<std::size_t>(
          std::count_if(orders.begin(), orders.end(), [&](unsigned o) { return pk % o == 0 && o <= pk; }));
      if (cnt == prev) break;
      unsigned r = 0;
      for (std::size_t ratio = cnt / prev; ratio > 1; ratio /= p) ++r;
      ranks.push_back(r);
      prev = cnt;
    }
    while (rest % p == 0) rest /= p;
    for (std::size_t i = 0; i < ranks.size(); ++i) {
      const unsigned next = i + 1 < ranks.size() ? ranks[i + 1] : 0;
      unsigned pk = 1;
      for (std::size_t e = 0; e <= i; ++e) pk *= p;
      for (unsigned c = 0; c < ranks[i] - next; ++c) result.push_back(pk);
    }
  }
  std::sort(result.rbegin(), result.rend());
  return result;
}

}  // namespace

std::vector<Subgroup> subgroups(const FinGroup& g) {
  const Table t(g);
  auto masks = t.all_subgroups();
  std::vector<Subgroup> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back({t.subgroup(g, m), t.normal(m)});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.group.order() != b.group.order()) return a.group.order() < b.group.order();
    return a.group.elements() < b.group.elements();
  });
  return out;
}

bool is_normal(const FinGroup& g, const FinGroup& n) {
  if (!n.is_subgroup_of(g)) return false;
  for (const auto& x : g.generators())
    for (const auto& h : n.elements())
      if (!n.contains(x * h * x.inverse())) return false;
  return true;
}

FinGroup center(const FinGroup& g) {
  std::vector<Perm> z;
  for (const auto& x : g.elements())
    if (std::all_of(g.generators().begin(), g.generators().end(), [&](const Perm& y) { return x * y == y * x; }))
      z.push_back(x);
  return FinGroup::from_elements(std::move(z));
}

FinGroup derived_subgroup(const FinGroup& g) {
  std::set<Perm> comms;
  for (const auto& x : g.elements())
    for (const auto& y : g.elements()) comms.insert(x * y * x.inverse() * y.inverse());
  return FinGroup::closure(std::vector<Perm>(comms.begin(), comms.end()), g.degree());
}

std::vector<unsigned> abelian_invariants(const FinGroup& g) {
  if (!g.is_abelian()) throw std::invalid_argument("abelian_invariants: group is not abelian");
  std::vector<unsigned> orders;
  for (const auto& x : g.elements()) orders.push_back(x.order());
  return invariants_from_orders(orders);
}

std::string abelian_name(const std::vector<unsigned>& inv) {
  if (inv.empty()) return "1";
  if (inv.size() >= 2 && std::all_of(inv.begin(), inv.end(), [](unsigned x) { return x == 2; })) {
    if (inv.size() == 2) return "V4";
    return "E" + std::to_string(1u << inv.size());
  }
  std::string name;
  for (std::size_t i = 0; i < inv.size(); ++i) name += (i ? "×C" : "C") + std::to_string(inv[i]);
  return name;
}

FinGroup quotient(const FinGroup& g, const FinGroup& n) {
  if (!is_normal(g, n)) throw std::invalid_argument("quotient: subgroup is not normal");
  const std::size_t cosets = g.order() / n.order();
  std::vector<int> coset_of(g.order(), -1);
  std::vector<Perm> reps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset_of[i] >= 0) continue;
    const Perm& x = g.elements()[i];
    for (const auto& h : n.elements()) coset_of[g.index_of(x * h)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  std::vector<Perm> images;
  for (const auto& gen : g.generators()) {
    std::vector<std::uint8_t> im(cosets);
    for (std::size_t c = 0; c < cosets; ++c) im[c] = static_cast<std::uint8_t>(coset_of[g.index_of(gen * reps[c])]);
    images.emplace_back(std::move(im));
  }
  return FinGroup::closure(images, cosets);
}

std::string quotient_type(const FinGroup& g, const FinGroup& n) { return identify(quotient(g, n)); }

bool is_q8(const FinGroup& g) {
  if (g.order() != 8 || g.is_abelian()) return false;
  return std::count_if(g.elements().begin(), g.elements().end(), [](const Perm& p) { return p.order() == 2; }) == 1;
}

Fingerprint fingerprint(const FinGroup& g) {
  const Table t(g);
  Fingerprint f;
  f.order = g.order();
  for (auto o : t.order) {
    ++f.element_orders[o];
    if (o == 8) f.has_element_of_order_8 = true;
  }
  f.center_type = abelian_invariants(center(g));

  // G/G' is abelian: its invariants follow from the orders of the cosets xG'.
  const Mask derived = mask_of(g, derived_subgroup(g));
  const auto derived_size = static_cast<std::size_t>(std::popcount(derived));
  std::vector<unsigned> coset_orders;
  for (std::size_t i = 0; i < t.n; ++i) {
    unsigned k = 1;
    for (std::size_t x = i; !(derived >> x & 1); x = t.mul[x][i]) ++k;
    coset_orders.push_back(k);
  }
  // Every coset contributes |G'| equal entries; keep one per coset.
  std::sort(coset_orders.begin(), coset_orders.end());
  std::vector<unsigned> thinned;
  for (std::size_t i = 0; i < coset_orders.size(); i += derived_size) thinned.push_back(coset_orders[i]);
  f.abelianization_type = invariants_from_orders(thinned);

  for (Mask m : t.all_subgroups()) {
    const auto size = static_cast<std::size_t>(std::popcount(m));
    ++f.subgroup_counts[{size, t.normal(m)}];
    if (size == 8 && !f.has_q8_subgroup && is_q8(t.subgroup(g, m))) f.has_q8_subgroup = true;
  }
  return f;
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream out;
  out << "order " << f.order << "; element orders {";
  bool first = true;
  for (auto [o, c] : f.element_orders) {
    out << (first ? "" : ", ") << o << ':' << c;
    first = false;
  }
  out << "}; center " << abelian_name(f.center_type) << "; abelianization " << abelian_name(f.abelianization_type)
      << "; subgroups";
  for (const auto& [key, c] : f.subgroup_counts) out << ' ' << key.first << (key.second ? "n" : "") << 'x' << c;
  out << "; Q8 subgroup " << (f.has_q8_subgroup ? "yes" : "no") << "; order-8 element "
      << (f.has_element_of_order_8 ? "yes" : "no");
  return out.str();
}

PauliCriteria pauli_criteria(const FinGroup& g) {
  const Table t(g);
  PauliCriteria c;
  c.no_element_of_order_8 = std::none_of(t.order.begin(), t.order.end(), [](unsigned o) { return o == 8; });
  for (Mask m : t.all_subgroups()) {
    if (!t.normal(m)) c.has_non_normal_subgroup = true;
    if (std::popcount(m) == 8 && is_q8(t.subgroup(g, m))) c.has_q8_subgroup = true;
  }
  return c;
}

std::string identify(const FinGroup& g) {
  const std::size_t n = g.order();
  if (n > 32) throw std::out_of_range("identify: order " + std::to_string(n) + " exceeds 32");
  if (g.is_abelian()) return abelian_name(abelian_invariants(g));
  if (n == 6) return "S3";
  if (n == 8 || n == 16) {
    if (n == 16 && pauli_criteria(g).all()) return "Pauli";
    const auto fp = fingerprint(g);
    for (const auto& entry : n == 8 ? order8_catalog() : order16_catalog())
      if (!entry.group.is_abelian() && fingerprint(entry.group) == fp) return entry.name;
    throw std::logic_error("identify: order-" + std::to_string(n) + " group missing from catalog");
  }
  if (n == 32) {
    static const Fingerprint hol = fingerprint(hol_c8_model());
    return fingerprint(g) == hol ? "Hol(C8)" : "unidentified order-32 group";
  }
  throw std::out_of_range("identify: non-abelian groups of order " + std::to_string(n) + " are not catalogued");
}

// ---------------------------------------------------------------------------
// Concrete groups

GaussianMatrix operator*(const GaussianMatrix& a, const GaussianMatrix& b) {
  GaussianMatrix c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      int re = 0, im = 0;
      for (int k = 0; k < 2; ++k) {
        const auto [ar, ai] = a.entries[i][k];
        const auto [br, bi] = b.entries[k][j];
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      c.entries[i][j] = {re, im};
    }
  return c;
}

GaussianMatrix pauli_x() { return {{{{{{0, 0}, {1, 0}}}, {{{1, 0}, {0, 0}}}}}}; }
GaussianMatrix pauli_y() { return {{{{{{0, 0}, {0, -1}}}, {{{0, 1}, {0, 0}}}}}}; }
GaussianMatrix pauli_z() { return {{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {-1, 0}}}}}}; }

std::vector<GaussianMatrix> matrix_closure(const std::vector<GaussianMatrix>& generators) {
  const GaussianMatrix one{{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}}}}}};
  std::set<GaussianMatrix> seen{one};
  std::vector<GaussianMatrix> frontier{one};
  while (!frontier.empty()) {
    std::vector<GaussianMatrix> next;
    for (const auto& x : frontier)
      for (const auto& g : generators) {
        auto y = g * x;
        if (seen.insert(y).second) next.push_back(y);
      }
    if (seen.size() > 1024) throw std::runtime_error("matrix_closure: group is too large");
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> regular_images(const std::vector<GaussianMatrix>& group_elements,
                                 const std::vector<GaussianMatrix>& generators) {
  std::vector<Perm> out;
  for (const auto& g : generators) {
    std::vector<std::uint8_t> im;
    for (const auto& x : group_elements) {
      auto it = std::find(group_elements.begin(), group_elements.end(), g * x);
      if (it == group_elements.end()) throw std::invalid_argument("regular_images: set not closed");
      im.push_back(static_cast<std::uint8_t>(it - group_elements.begin()));
    }
    out.emplace_back(std::move(im));
  }
  return out;
}

FinGroup pauli_matrix_group() {
  const std::vector<GaussianMatrix> gens{pauli_x(), pauli_y(), pauli_z()};
  return FinGroup::closure(regular_images(matrix_closure(gens), gens));
}

Perm affine_perm(unsigned t, unsigned s) {
  if (s % 2 == 0) throw std::invalid_argument("affine_perm: multiplier must be odd");
  std::vector<std::uint8_t> im(8);
  for (unsigned m = 0; m < 8; ++m) im[m] = static_cast<std::uint8_t>((s * m + t) % 8);
  return Perm(std::move(im));
}

FinGroup hol_c8_model() {
  return FinGroup::closure({affine_perm(1, 1), affine_perm(0, 3), affine_perm(0, 5)});
}

FinGroup group_from_table(std::size_t n, const std::vector<std::vector<std::size_t>>& table) {
  std::vector<Perm> left;
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<std::uint8_t> im(n);
    for (std::size_t x = 0; x < n; ++x) im[x] = static_cast<std::uint8_t>(table[g][x]);
    left.emplace_back(std::move(im));
  }
  return FinGroup::from_elements(std::move(left));
}

}  // namespace pauli::groups
