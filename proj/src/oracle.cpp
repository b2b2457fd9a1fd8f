#include "pauli/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pauli::oracle {

using pauli::to_string;

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string(const CycleType& t) {
  std::string s = "{";
  for (std::size_t n = 0; n < t.size(); ++n) s += (n ? "," : "") + std::to_string(t[n]);
  return s + "}";
}

bool has_equal_parts(const CycleType& t) {
  return std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) == t.end();
}

namespace fp {

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

u64 pow_mod(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  for (; e; e >>= 1) {
    if (e & 1) r = static_cast<u64>(static_cast<u128>(r) * b % p);
    b = static_cast<u64>(static_cast<u128>(b) * b % p);
  }
  return r;
}

namespace {
u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }
}  // namespace

Poly mod(Poly f, const Poly& g, u64 p) {
  f = trim(std::move(f));
  if (g.empty()) throw std::domain_error("fp::mod: division by zero polynomial");
  const u64 lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const u64 q = static_cast<u64>(static_cast<u128>(f.back()) * lead_inv % p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t n = 0; n < g.size(); ++n)
      f[shift + n] = (f[shift + n] + p - static_cast<u64>(static_cast<u128>(q) * g[n] % p)) % p;
    f = trim(std::move(f));
  }
  return f;
}

Poly mul_mod(const Poly& f, const Poly& g, const Poly& m, u64 p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j)
      out[i + j] = static_cast<u64>((out[i + j] + static_cast<u128>(f[i]) * g[j]) % p);
  return mod(std::move(out), m, p);
}

Poly gcd(Poly f, Poly g, u64 p) {
  f = trim(std::move(f));
  g = trim(std::move(g));
  while (!g.empty()) {
    Poly r = mod(f, g, p);
    f = std::move(g);
    g = std::move(r);
  }
  if (f.empty()) return f;
  const u64 lead_inv = inv_mod(f.back(), p);
  for (auto& x : f) x = static_cast<u64>(static_cast<u128>(x) * lead_inv % p);
  return f;
}

Poly divide(Poly f, const Poly& g, u64 p) {
  f = trim(std::move(f));
  if (g.empty()) throw std::domain_error("fp::divide: division by zero polynomial");
  if (f.size() < g.size()) return {};
  const u64 lead_inv = inv_mod(g.back(), p);
  Poly q(f.size() - g.size() + 1, 0);
  while (f.size() >= g.size()) {
    const u64 c = static_cast<u64>(static_cast<u128>(f.back()) * lead_inv % p);
    const std::size_t shift = f.size() - g.size();
    q[shift] = c;
    for (std::size_t n = 0; n < g.size(); ++n)
      f[shift + n] = (f[shift + n] + p - static_cast<u64>(static_cast<u128>(c) * g[n] % p)) % p;
    f = trim(std::move(f));
  }
  if (!f.empty()) throw std::domain_error("fp::divide: division is not exact");
  return q;
}

}  // namespace fp

u64 reduce_mod(const Rational& c, u64 p) {
  const u64 num = mpz_fdiv_ui(c.get_num_mpz_t(), p);
  const u64 den = mpz_fdiv_ui(c.get_den_mpz_t(), p);
  if (den == 0) throw std::invalid_argument("reduce_mod: p divides the denominator");
  return static_cast<u64>(static_cast<u128>(num) * fp::pow_mod(den, p - 2, p) % p);
}

CycleType factor_mod_p(const Rational& c, u64 p) {
  if (p < 3 || p >= (u64(1) << 32) || !is_probable_prime(Integer(std::to_string(p))))
    throw std::invalid_argument("factor_mod_p: " + std::to_string(p) + " is not an odd prime below 2^32");
  if (c == 0 || mpz_divisible_ui_p(c.get_num_mpz_t(), p) || mpz_divisible_ui_p(c.get_den_mpz_t(), p))
    throw std::invalid_argument("factor_mod_p: " + std::to_string(p) + " is a bad prime for c = " + to_string(c));

  fp::Poly f(9, 0);
  f[0] = reduce_mod(c, p);
  f[8] = 1;
  const fp::Poly x{0, 1};
  fp::Poly h = x;  // X^(p^d) mod f
  CycleType out;
  for (unsigned d = 1; 2 * d <= f.size() - 1; ++d) {
    // h <- h^p mod f by square and multiply.
    fp::Poly result{1}, base = h;
    for (u64 e = p; e; e >>= 1) {
      if (e & 1) result = fp::mul_mod(result, base, f, p);
      base = fp::mul_mod(base, base, f, p);
    }
    h = result;
    fp::Poly diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    const fp::Poly g = fp::gcd(f, diff, p);
    const std::size_t gdeg = g.size() - 1;
    if (gdeg > 0) {
      for (std::size_t n = 0; n < gdeg / d; ++n) out.push_back(d);
      f = fp::divide(f, g, p);
      h = fp::mod(h, f, p);
    }
  }
  if (f.size() > 1) out.push_back(static_cast<unsigned>(f.size() - 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::map<CycleType, Rational> group_cycle_types(const groups::FinGroup& g) {
  if (g.degree() != 8) throw std::invalid_argument("group_cycle_types: group must act on 8 points");
  std::map<CycleType, std::uint64_t> counts;
  for (const auto& p : g.elements()) ++counts[p.cycle_type()];
  std::map<CycleType, Rational> out;
  for (const auto& [t, n] : counts) out[t] = make_rational(Integer(static_cast<unsigned long>(n)), Integer(static_cast<unsigned long>(g.order())));
  return out;
}

Census census(const Rational& c, u64 bound) {
  if (c == 0) throw std::invalid_argument("census: c must be nonzero");
  if (bound < 100) throw std::invalid_argument("census: bound must be at least 100");
  if (bound > (u64(1) << 32)) throw std::invalid_argument("census: bound must be below 2^32");
  Census out;
  out.c = c;
  out.bound = bound;
  for (unsigned p : primes_below(static_cast<unsigned>(bound))) {
    if (p == 2 || mpz_divisible_ui_p(c.get_num_mpz_t(), p) || mpz_divisible_ui_p(c.get_den_mpz_t(), p)) {
      out.skipped.push_back(p);
      continue;
    }
    ++out.counts[factor_mod_p(c, p)];
    ++out.total;
  }
  return out;
}

std::string to_string(const Census& census) {
  std::ostringstream out;
  out << "census of X^8 + " << to_string(census.c) << " over primes < " << census.bound << '\n';
  out << "good primes: " << census.total << "\nskipped:";
  for (auto p : census.skipped) out << ' ' << p;
  out << '\n';
  for (const auto& [t, n] : census.counts) out << "  " << to_string(t) << "  " << n << '\n';
  return out.str();
}

Verdict consistent(const Census& census, const groups::FinGroup& model, const Rational& tolerance) {
  if (census.total < 500)
    throw std::invalid_argument("consistent: census has " + std::to_string(census.total) +
                                " good primes, at least 500 are needed");
  const auto expected = group_cycle_types(model);
  Verdict v;
  std::set<CycleType> types;
  for (const auto& [t, n] : census.counts) {
    types.insert(t);
    if (!expected.count(t)) v.unexpected.push_back(t);
  }
  for (const auto& [t, q] : expected) types.insert(t);
  const Integer total(std::to_string(census.total));
  for (const auto& t : types) {
    const auto it = census.counts.find(t);
    const Rational observed =
        it == census.counts.end() ? Rational(0) : make_rational(Integer(std::to_string(it->second)), total);
    const auto e = expected.find(t);
    const Rational model_share = e == expected.end() ? Rational(0) : e->second;
    const Rational dev = abs(observed - model_share);
    if (dev > v.worst_deviation || v.worst_type.empty()) {
      v.worst_deviation = dev;
      v.worst_type = t;
    }
  }
  if (!v.unexpected.empty()) {
    v.reason = "observed cycle type " + to_string(v.unexpected.front()) + " does not occur in the model";
  } else if (v.worst_deviation > tolerance) {
    v.reason = "frequency of " + to_string(v.worst_type) + " deviates by more than the tolerance";
  } else {
    v.pass = true;
    v.reason = "all frequencies within tolerance";
  }
  return v;
}

const std::vector<StockModel>& stock_models() {
  static const std::vector<StockModel> models = [] {
    using binomial::GaloisKind;
    std::vector<StockModel> out;
    for (GaloisKind kind : {GaloisKind::K8, GaloisKind::D16, GaloisKind::QD16, GaloisKind::Pauli, GaloisKind::B32}) {
      auto g = binomial::octic_model(kind);
      const auto tag = binomial::make_tag(kind);
      // The stock model must have the structure it is named after.
      if (groups::identify(g) != tag.group_name())
        throw std::logic_error("stock model " + tag.name() + " identifies as " + groups::identify(g));
      out.push_back({tag.name(), std::move(g), "affine subgroup of Hol(C8)"});
    }
    const char* abelian_note = "abelian of order 16: a transitive abelian group is regular, so no faithful 8-point model";
    out.push_back({"C16", std::nullopt, abelian_note});
    out.push_back({"C8×C2", std::nullopt, abelian_note});
    out.push_back({"Q8×C2", std::nullopt, "no faithful transitive action on 8 points (point stabilizer would be a "
                                          "non-normal C2, but every C2 in Q8×C2 is central)"});
    return out;
  }();
  return models;
}

Verdict consistent(const Census& census, const StockModel& stock, const Rational& tolerance) {
  if (stock.model) return consistent(census, *stock.model, tolerance);
  if (census.total < 500)
    throw std::invalid_argument("consistent: census has " + std::to_string(census.total) +
                                " good primes, at least 500 are needed");
  Verdict v;
  v.reason = "structurally excluded: " + stock.note;
  return v;
}

std::optional<std::string> predicted_model(const binomial::GaloisTag& tag) {
  if (tag.kind == binomial::GaloisKind::Reducible) return std::nullopt;
  return tag.name();
}

}  // namespace pauli::oracle
