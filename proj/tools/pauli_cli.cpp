// Command-line front end: classification of X^8 + c, the subgroup/subfield
// lattice of the Pauli field, Witt identities, embedding criteria and the
// Frobenius census oracle.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauli/arith.hpp"
#include "pauli/binomial.hpp"
#include "pauli/groups.hpp"
#include "pauli/oracle.hpp"
#include "pauli/qforms.hpp"
#include "pauli/splitting.hpp"
#include "pauli/witt.hpp"

using namespace pauli;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadInput = 2;

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Rational rational_arg(const std::string& text) {
  try {
    return parse_rational(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("invalid rational '") + text + "': " + e.what());
  }
}

// "p/q", an integer, or a terminating decimal such as 0.05, read exactly.
Rational proportion_arg(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos) return rational_arg(text);
  const std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
  if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos)
    throw InputError("invalid proportion '" + text + "'");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
  const Rational w = whole.empty() ? Rational(0) : rational_arg(whole);
  return w + make_rational(Integer(frac, 10), scale);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }
std::string pass_fail(bool b) { return b ? "PASS" : "FAIL"; }

// classify ------------------------------------------------------------------

int cmd_classify(const std::string& c_text, bool as_json) {
  const Rational c = rational_arg(c_text);
  if (c == 0) throw InputError("c must be nonzero");
  const auto cls = binomial::classify_octic_detailed(c);
  const auto& tag = cls.tag;
  if (as_json) {
    json j;
    j["c"] = to_string(c);
    j["tag"] = tag.name();
    j["group"] = tag.group_name();
    j["degree"] = tag.degree ? json(*tag.degree) : json(nullptr);
    j["branch"] = cls.branch;
    j["irreducible"] = cls.irreducibility.irreducible;
    j["irreducibility_clause"] = cls.irreducibility.clause;
    j["abelian"] = binomial::schinzel_abelian(8, c);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "X^8 + " << to_string(c) << '\n';
  if (tag.kind == binomial::GaloisKind::Reducible) {
    std::cout << "Reducible (" << cls.branch << ")\n";
    return kOk;
  }
  std::cout << tag.name();
  if (tag.group_name() != tag.name()) std::cout << " = " << tag.group_name();
  std::cout << " (order " << *tag.degree << "), degree " << *tag.degree << '\n';
  std::cout << "branch: " << cls.branch << '\n';
  std::cout << "irreducible: " << cls.irreducibility.clause << '\n';
  std::cout << "abelian (c^2 an 8th power): " << yes_no(binomial::schinzel_abelian(8, c)) << '\n';
  return kOk;
}

// lattice -------------------------------------------------------------------

splitting::SplittingField field_arg(const std::string& k_text) {
  const Rational k = rational_arg(k_text);
  try {
    return splitting::SplittingField(k);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

json aut_list(const std::vector<splitting::AffineAut>& auts) {
  json out = json::array();
  for (const auto& g : auts) out.push_back(json::array({g.t, g.s}));
  return out;
}

int cmd_lattice(const std::string& k_text, const std::string& format) {
  const auto f = field_arg(k_text);
  const auto report = splitting::lattice_report(f);
  if (format == "dot") {
    std::cout << splitting::lattice_dot(report);
  } else if (format == "json") {
    json j;
    j["k"] = to_string(report.k);
    j["subgroups"] = json::array();
    for (const auto& e : report.entries) {
      json s;
      s["order"] = e.subgroup.size();
      s["normal"] = e.normal;
      s["group"] = e.group_name;
      s["generators"] = aut_list(e.generators);
      s["elements"] = aut_list(e.subgroup);
      s["field_degree"] = e.field.degree;
      s["field_label"] = e.field.label ? json(*e.field.label) : json(nullptr);
      s["primitive"] = splitting::to_string(e.field.primitive);
      j["subgroups"].push_back(s);
    }
    j["covers"] = json::array();
    for (const auto& [lo, hi] : report.covers) j["covers"].push_back(json::array({lo, hi}));
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << splitting::lattice_text(report);
  }
  return kOk;
}

// witt-verify ---------------------------------------------------------------

int cmd_witt_verify(const std::string& k_text, bool as_json) {
  const auto f = field_arg(k_text);
  const auto t = witt::check_T(f.k());
  const auto br = witt::witt_beta_rho(f);
  const bool ok = t.det_is_one && t.isometry && br.all();
  if (as_json) {
    json j;
    j["k"] = to_string(f.k());
    j["det_T"] = witt::to_string(t.det);
    j["det_is_one"] = t.det_is_one;
    j["isometry"] = t.isometry;
    j["beta"] = splitting::to_string(br.beta);
    j["rho"] = witt::to_string(br.rho);
    j["sqrt_rho_beta"] = splitting::to_string(br.sqrt_rho_beta);
    j["factorization"] = br.factorization_holds;
    j["a_minus_abar_nonzero"] = br.a_minus_abar_nonzero;
    j["sign_flip_under_4_1"] = br.flipped_by_L_fixgroup;
    j["beta_closed_form"] = br.closed_form_holds;
    j["pass"] = ok;
    std::cout << j.dump(2) << '\n';
  } else {
    const auto& T = witt::witt_T(f.k());
    std::cout << "k = " << to_string(f.k()) << "\nT =\n";
    for (const auto& row : T) {
      std::cout << " ";
      for (const auto& x : row) std::cout << "  " << witt::to_string(x);
      std::cout << '\n';
    }
    std::cout << pass_fail(t.det_is_one) << "  det(T) = " << witt::to_string(t.det) << '\n';
    std::cout << pass_fail(t.isometry) << "  T^t diag(2, k, 1/(2k)) T = I\n";
    std::cout << "beta = " << splitting::to_string(br.beta) << '\n';
    std::cout << "rho  = " << witt::to_string(br.rho) << '\n';
    std::cout << pass_fail(br.factorization_holds) << "  rho*beta = ((a - abar) w (1 + r v2))^2\n";
    std::cout << pass_fail(br.a_minus_abar_nonzero) << "  a - abar != 0\n";
    std::cout << pass_fail(br.flipped_by_L_fixgroup) << "  (4,1) negates sqrt(rho*beta), so E = L(sqrt(rho*beta))\n";
    std::cout << pass_fail(br.closed_form_holds) << "  beta = (2 - r)(k + K r v2 / 2) / (2k)\n";
    std::cout << (ok ? "all identities hold\n" : "verification FAILED\n");
  }
  return ok ? kOk : kVerifyFailed;
}

// embed / sl-search ---------------------------------------------------------

std::string triplet_text(const qforms::Triplet& t) {
  return "(" + to_string(t.u) + ", " + to_string(t.v) + ", " + to_string(t.x) + ")";
}

std::vector<Rational> triple_args(const std::vector<std::string>& args) {
  std::vector<Rational> out;
  for (const auto& s : args) out.push_back(rational_arg(s));
  if (!qforms::quadratically_independent(out))
    throw InputError("square classes of " + args[0] + ", " + args[1] + ", " + args[2] + " are dependent");
  return out;
}

int cmd_embed(const std::vector<std::string>& args, bool compare, bool as_json) {
  const auto v = triple_args(args);
  const Rational &a = v[0], &b = v[1], &c = v[2];
  const bool eq15 = qforms::pauli_embeddable(a, b, c);
  const bool eq14 = qforms::brauer_condition(a, b, c);
  const std::pair<Rational, Rational> pairs[] = {{a, b}, {a, c}, {b, c}};
  const auto sl = qforms::sl_search(a, b, c);

  // Agreement of the two criteria over every ordered independent triplet of S_L.
  struct Row {
    qforms::Triplet t;
    bool brauer, pauli;
  };
  std::vector<Row> rows;
  if (compare) {
    const auto s = qforms::sl_set(a, b, c);
    for (const auto& x : s)
      for (const auto& y : s)
        for (const auto& z : s) {
          if (!qforms::quadratically_independent({x.value(), y.value(), z.value()})) continue;
          rows.push_back({{x.representative(), y.representative(), z.representative()},
                          qforms::brauer_condition(x.value(), y.value(), z.value()),
                          qforms::pauli_embeddable(x.value(), y.value(), z.value())});
        }
  }
  std::size_t agree = 0;
  for (const auto& r : rows) agree += r.brauer == r.pauli;

  if (as_json) {
    json j;
    j["a"] = to_string(a);
    j["b"] = to_string(b);
    j["c"] = to_string(c);
    j["pauli_embeddable"] = eq15;
    j["brauer_condition"] = eq14;
    j["witt_embeddable"] = json::array();
    for (const auto& [x, y] : pairs)
      j["witt_embeddable"].push_back({{"pair", json::array({to_string(x), to_string(y)})},
                                      {"value", qforms::witt_embeddable(x, y)}});
    j["sl_search"] = json::array();
    for (const auto& t : sl) j["sl_search"].push_back(json::array({to_string(t.u), to_string(t.v), to_string(t.x)}));
    if (compare) {
      j["compare"] = json::array();
      for (const auto& r : rows)
        j["compare"].push_back({{"triplet", json::array({to_string(r.t.u), to_string(r.t.v), to_string(r.t.x)})},
                                {"brauer", r.brauer},
                                {"pauli", r.pauli}});
      j["agreements"] = agree;
      j["triplets"] = rows.size();
    }
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "L = Q(√" << to_string(a) << ", √" << to_string(b) << ", √" << to_string(c) << ")\n";
  std::cout << "[a,b,ab] ≅ [1,c,c]:        " << (eq15 ? "holds" : "fails") << '\n';
  std::cout << "(abc,-1) = (a,b) locally:  " << (eq14 ? "holds" : "fails") << '\n';
  for (const auto& [x, y] : pairs)
    std::cout << "witt_embeddable(" << to_string(x) << ", " << to_string(y)
              << "): " << yes_no(qforms::witt_embeddable(x, y)) << '\n';
  std::cout << "S_L triplets with [u,v,uv] ≅ [1,x,x]: " << sl.size() << '\n';
  for (const auto& t : sl) std::cout << "  " << triplet_text(t) << '\n';
  if (compare) {
    std::cout << "triplet                brauer  pauli\n";
    for (const auto& r : rows) {
      std::string name = triplet_text(r.t);
      name.resize(std::max<std::size_t>(name.size(), 22), ' ');
      std::cout << name << " " << (r.brauer ? "yes   " : "no    ") << "  " << (r.pauli ? "yes" : "no")
                << (r.brauer == r.pauli ? "" : "   *") << '\n';
    }
    std::cout << "agree on " << agree << " of " << rows.size() << " triplets\n";
  }
  return kOk;
}

int cmd_sl_search(const std::vector<std::string>& args, bool as_json) {
  const auto v = triple_args(args);
  const auto sl = qforms::sl_search(v[0], v[1], v[2]);
  if (as_json) {
    json j = json::array();
    for (const auto& t : sl) j.push_back(json::array({to_string(t.u), to_string(t.v), to_string(t.x)}));
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  for (const auto& t : sl) std::cout << triplet_text(t) << '\n';
  std::cout << sl.size() << " triplet(s)\n";
  return kOk;
}

// oracle --------------------------------------------------------------------

int cmd_oracle(const std::string& c_text, std::uint64_t primes, const std::string& tol_text, bool as_json) {
  const Rational c = rational_arg(c_text);
  if (c == 0) throw InputError("c must be nonzero");
  if (primes < 100) throw InputError("--primes must be at least 100");
  if (primes > 100000000) throw InputError("--primes must be at most 10^8");
  const Rational tol = proportion_arg(tol_text);
  if (tol < 0 || tol > 1) throw InputError("--tolerance must lie in [0, 1]");

  const auto tag = binomial::classify_octic(c);
  const auto census = oracle::census(c, primes);
  const auto predicted = oracle::predicted_model(tag);
  bool uniform = true;
  for (const auto& [t, n] : census.counts) uniform = uniform && oracle::has_equal_parts(t);

  struct Row {
    std::string name;
    oracle::Verdict v;
  };
  std::vector<Row> rows;
  const bool enough = census.total >= 500;
  if (enough)
    for (const auto& m : oracle::stock_models()) rows.push_back({m.name, oracle::consistent(census, m, tol)});

  bool ok = true;
  if (predicted) {
    if (!enough) ok = false;
    for (const auto& r : rows)
      if (r.name == *predicted) ok = r.v.pass;
  }

  if (as_json) {
    json j;
    j["c"] = to_string(c);
    j["bound"] = census.bound;
    j["good_primes"] = census.total;
    j["skipped"] = census.skipped;
    j["counts"] = json::object();
    for (const auto& [t, n] : census.counts) j["counts"][oracle::to_string(t)] = n;
    j["uniform_parts"] = uniform;
    j["predicted"] = predicted ? json(*predicted) : json(nullptr);
    j["tolerance"] = to_string(tol);
    j["models"] = json::array();
    for (const auto& r : rows)
      j["models"].push_back({{"model", r.name},
                             {"pass", r.v.pass},
                             {"worst_type", oracle::to_string(r.v.worst_type)},
                             {"worst_deviation", to_string(r.v.worst_deviation)},
                             {"reason", r.v.reason}});
    j["pass"] = ok;
    std::cout << j.dump(2) << '\n';
    return ok ? kOk : kVerifyFailed;
  }

  std::cout << oracle::to_string(census);
  std::cout << "uniform cycle parts: " << yes_no(uniform) << '\n';
  std::cout << "predicted: " << (predicted ? *predicted : std::string("none (reducible)")) << '\n';
  if (!enough) std::cout << "fewer than 500 good primes; no consistency verdict\n";
  for (const auto& r : rows) {
    std::string name = r.name;
    name.resize(std::max<std::size_t>(name.size(), 8), ' ');
    std::cout << pass_fail(r.v.pass) << "  vs " << name;
    if (!r.v.worst_type.empty())
      std::cout << "  worst " << oracle::to_string(r.v.worst_type) << " off by " << to_string(r.v.worst_deviation);
    std::cout << "  (" << r.v.reason << ")\n";
  }
  if (predicted) std::cout << (ok ? "PASS" : "FAIL") << " vs predicted model " << *predicted << '\n';
  return ok ? kOk : kVerifyFailed;
}

// group-identify ------------------------------------------------------------

groups::Perm perm_arg(const std::string& text) {
  std::vector<std::uint8_t> images;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 3)
      throw InputError("invalid permutation '" + text + "'");
    images.push_back(static_cast<std::uint8_t>(std::stoi(item)));
  }
  try {
    return groups::Perm(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

groups::Perm affine_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("affine map must be given as t,s");
  try {
    return groups::affine_perm(std::stoul(text.substr(0, comma)) % 8, std::stoul(text.substr(comma + 1)) % 8);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("invalid affine map '") + text + "': " + e.what());
  }
}

int cmd_group_identify(const std::vector<std::string>& perms, const std::vector<std::string>& affine,
                       const std::string& named, bool as_json) {
  std::optional<groups::FinGroup> g;
  if (!named.empty()) {
    if (named == "pauli")
      g = groups::pauli_matrix_group();
    else if (named == "hol")
      g = groups::hol_c8_model();
    else
      throw InputError("unknown group '" + named + "' (expected pauli or hol)");
  } else {
    std::vector<groups::Perm> gens;
    for (const auto& p : perms) gens.push_back(perm_arg(p));
    for (const auto& a : affine) gens.push_back(affine_arg(a));
    if (gens.empty()) throw InputError("no generators given");
    try {
      g = groups::FinGroup::closure(gens);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (g->order() > 32) throw InputError("groups of order above 32 are not identified");
  std::string name;
  try {
    name = groups::identify(*g);
  } catch (const std::out_of_range& e) {
    name = std::string("unidentified (") + e.what() + ")";
  }
  const auto fp = groups::fingerprint(*g);
  const auto crit = groups::pauli_criteria(*g);
  if (as_json) {
    json j;
    j["order"] = g->order();
    j["degree"] = g->degree();
    j["name"] = name;
    j["abelian"] = g->is_abelian();
    j["transitive"] = g->is_transitive();
    json orders = json::object();
    for (const auto& [o, n] : fp.element_orders) orders[std::to_string(o)] = n;
    j["element_orders"] = orders;
    j["center"] = groups::abelian_name(fp.center_type);
    j["abelianization"] = groups::abelian_name(fp.abelianization_type);
    j["has_q8_subgroup"] = fp.has_q8_subgroup;
    j["has_element_of_order_8"] = fp.has_element_of_order_8;
    j["pauli_criteria"] = {{"no_element_of_order_8", crit.no_element_of_order_8},
                           {"has_non_normal_subgroup", crit.has_non_normal_subgroup},
                           {"has_q8_subgroup", crit.has_q8_subgroup}};
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  std::cout << "order " << g->order() << " on " << g->degree() << " points: " << name << '\n';
  std::cout << groups::to_string(fp) << '\n';
  std::cout << "criteria: no element of order 8 " << yes_no(crit.no_element_of_order_8)
            << ", non-normal subgroup " << yes_no(crit.has_non_normal_subgroup) << ", Q8 subgroup "
            << yes_no(crit.has_q8_subgroup) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Galois groups of X^8 + c, the Pauli field lattice and embedding criteria"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format: text, json (dot for lattice)")
      ->check(CLI::IsMember({"text", "json", "dot"}));

  std::string c_text, k_text, tol_text = "0.05", named;
  std::vector<std::string> triple, perms, affine;
  std::uint64_t primes = 50000;
  bool compare = false;

  auto* classify = app.add_subcommand("classify", "Galois group of X^8 + c");
  classify->add_option("c", c_text, "Constant term (integer or p/q)")->required();

  auto* lattice = app.add_subcommand("lattice", "Subgroup and subfield lattice of X^8 + k^2");
  lattice->add_option("k", k_text, "Positive rational, neither a square nor twice a square")->required();
  lattice->add_option("--format", format, "text, dot or json")->check(CLI::IsMember({"text", "json", "dot"}));

  auto* witt_cmd = app.add_subcommand("witt-verify", "Exact check of T, beta and rho for the field of X^8 + k^2");
  witt_cmd->add_option("k", k_text, "Positive rational, neither a square nor twice a square")->required();

  auto* embed = app.add_subcommand("embed", "Embedding criteria for Q(√a, √b, √c)");
  embed->add_option("abc", triple, "Three independent rationals")->expected(3)->required();
  embed->add_flag("--compare", compare, "Tabulate both criteria over all triplets from S_L");

  auto* sl = app.add_subcommand("sl-search", "Triplets (u, v, x) from S_L with [u,v,uv] ≅ [1,x,x]");
  sl->add_option("abc", triple, "Three independent rationals")->expected(3)->required();

  auto* orc = app.add_subcommand("oracle", "Frobenius cycle-type census against the predicted group");
  orc->add_option("c", c_text, "Constant term")->required();
  orc->add_option("--primes", primes, "Use primes below this bound")->capture_default_str();
  orc->add_option("--tolerance", tol_text, "Largest absolute frequency deviation")->capture_default_str();

  auto* ident = app.add_subcommand("group-identify", "Identify a permutation group of order at most 32");
  ident->add_option("perms", perms, "Generators as comma-separated images, e.g. 1,2,3,0");
  ident->add_option("--affine", affine, "Affine generator m -> s m + t on Z/8, given as t,s");
  ident->add_option("--named", named, "pauli or hol");

  for (auto* sub : {classify, witt_cmd, embed, sl, orc, ident})
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kBadInput;
  }

  const bool as_json = format == "json";
  try {
    if (*classify) return cmd_classify(c_text, as_json);
    if (*lattice) return cmd_lattice(k_text, format);
    if (*witt_cmd) return cmd_witt_verify(k_text, as_json);
    if (*embed) return cmd_embed(triple, compare, as_json);
    if (*sl) return cmd_sl_search(triple, as_json);
    if (*orc) return cmd_oracle(c_text, primes, tol_text, as_json);
    if (*ident) return cmd_group_identify(perms, affine, named, as_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}
