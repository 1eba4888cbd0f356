#include "g2gamma/io/json.hpp"

#include <algorithm>
#include <initializer_list>

#include "g2gamma/errors.hpp"
#include "g2gamma/ratfun/parse.hpp"

namespace g2gamma {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw MalformedInput(path + ": " + message);
}

void allow_keys(const Json& j, const std::string& path, std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : j.items())
    if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; }))
      fail(path + "." + k, "unknown field");
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const std::string& path, const char* key) {
  const Json& v = field(j, path, key);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

int positive_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || j.get<long long>() > 1000)
    fail(path, "expected a positive integer");
  return j.get<int>();
}

std::string number_text(const Json& j, const std::string& path) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail(path, "expected a string or an integer");
}

// Re-throws MalformedInput from the expression parsers with the path in front.
template <class F>
auto at(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const MalformedInput& e) {
    // Errors raised by nested readers already carry their own path.
    if (std::string_view(e.what()).starts_with(path)) throw;
    fail(path, e.what());
  }
}

Rational rational_from_json(const Json& j, const std::string& path) {
  const std::string text = number_text(j, path);
  return at(path, [&] { return parse_rational(text); });
}

std::string rational_text(const Rational& r) { return r.get_str(); }

Json poly_to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p) out[std::to_string(e)] = c.to_string();
  return out;
}

LaurentPoly poly_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object mapping exponents to coefficients");
  LaurentPoly p;
  for (const auto& [k, v] : j.items()) {
    int e = 0;
    try {
      std::size_t used = 0;
      e = std::stoi(k, &used);
      if (used != k.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      fail(path + "." + k, "exponent must be an integer");
    }
    p[e] += scalar_from_json(v, path + "." + k);
  }
  std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
  return p;
}

std::map<std::string, int> ramified_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object mapping labels to exponents");
  std::map<std::string, int> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number_integer()) fail(path + "." + k, "expected an integer exponent");
    out[k] = v.get<int>();
  }
  return out;
}

Json ramified_to_json(const std::map<std::string, int>& r) {
  Json out = Json::object();
  for (const auto& [k, e] : r) out[k] = e;
  return out;
}

Indecomposable summand_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) return Indecomposable(character_from_json(j, path), {}, 1);
  allow_keys(j, path, {"character", "atom", "atoms", "sp"});
  const MultChar chi = j.contains("character") ? character_from_json(j["character"], path + ".character") : MultChar();
  std::vector<AtomPtr> atoms;
  if (j.contains("atom") && j.contains("atoms")) fail(path, "give either \"atom\" or \"atoms\", not both");
  if (j.contains("atom")) atoms.push_back(atom_from_json(j["atom"], path + ".atom"));
  if (j.contains("atoms")) {
    const Json& list = j["atoms"];
    if (!list.is_array() || list.empty()) fail(path + ".atoms", "expected a non-empty list of atoms");
    for (std::size_t i = 0; i < list.size(); ++i)
      atoms.push_back(atom_from_json(list[i], path + ".atoms[" + std::to_string(i) + "]"));
  }
  if (!j.contains("character") && atoms.empty()) fail(path, "a summand needs \"character\", \"atom\" or \"atoms\"");
  const int sp = j.contains("sp") ? positive_int(j["sp"], path + ".sp") : 1;
  return Indecomposable(chi, std::move(atoms), sp);
}

}  // namespace

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (const auto p = detail.find("syntax error"); p != std::string::npos) detail = detail.substr(p);
    throw MalformedInput(what + ": invalid JSON at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + detail);
  }
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const std::string& path) {
  const std::string text = number_text(j, path);
  return at(path, [&] { return parse_scalar(text); });
}

Json to_json(const LaurentRational& f) {
  Json out{{"numerator", poly_to_json(f.numerator_terms())}, {"denominator", poly_to_json(f.denominator_terms())}};
  if (f.is_factored() && !f.is_zero()) {
    Json factors = Json::array();
    for (const auto& [c, e] : f.linear_factors()) factors.push_back(Json{{"root", c.to_string()}, {"exponent", e}});
    out["factored"] = Json{{"scale", f.scale().to_string()}, {"shift", f.shift()}, {"factors", std::move(factors)}};
  }
  return out;
}

LaurentRational laurent_from_json(const Json& j, const std::string& path) {
  allow_keys(j, path, {"numerator", "denominator", "factored"});
  const LaurentPoly num = poly_from_json(field(j, path, "numerator"), path + ".numerator");
  const LaurentPoly den = poly_from_json(field(j, path, "denominator"), path + ".denominator");
  if (den.empty()) fail(path + ".denominator", "zero denominator");
  if (!j.contains("factored")) return at(path, [&] { return LaurentRational::from_laurent(num, den); });

  // scale * X^shift * prod (1 - root X)^exponent; its canonical expansion
  // must reproduce numerator and denominator exactly.
  const std::string p = path + ".factored";
  const Json& fj = j["factored"];
  allow_keys(fj, p, {"scale", "shift", "factors"});
  const Json& shift = field(fj, p, "shift");
  if (!shift.is_number_integer()) fail(p + ".shift", "expected an integer");
  LaurentRational f = LaurentRational(scalar_from_json(field(fj, p, "scale"), p + ".scale")) *
                      LaurentRational::x_power(shift.get<int>());
  const Json& factors = field(fj, p, "factors");
  if (!factors.is_array()) fail(p + ".factors", "expected a list");
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::string q = p + ".factors[" + std::to_string(i) + "]";
    allow_keys(factors[i], q, {"root", "exponent"});
    const Scalar root = scalar_from_json(field(factors[i], q, "root"), q + ".root");
    if (root.is_zero()) fail(q + ".root", "must be nonzero");
    const Json& e = field(factors[i], q, "exponent");
    if (!e.is_number_integer()) fail(q + ".exponent", "expected an integer");
    f *= LaurentRational::linear(root).pow(e.get<int>());
  }
  if (f.is_zero()) fail(p + ".scale", "must be nonzero");
  if (f.numerator_terms() != num || f.denominator_terms() != den)
    fail(p, "does not match numerator/denominator");
  return f;
}

Json to_json(const MultChar& chi) {
  Json out;
  const auto& r = chi.ramified_part();
  if (r.empty()) {
    out["kind"] = "unramified";
    out["alpha"] = chi.alpha().to_string();
  } else {
    out["kind"] = "ramified";
    if (r.size() == 1 && r.begin()->second == 1)
      out["label"] = r.begin()->first;
    else
      out["labels"] = ramified_to_json(r);
    if (!chi.alpha().is_one()) out["alpha"] = chi.alpha().to_string();
  }
  out["twist"] = rational_text(chi.twist());
  return out;
}

MultChar character_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "trivial") return MultChar();
  if (j.is_string() || j.is_number_integer()) return MultChar::unramified(scalar_from_json(j, path));
  allow_keys(j, path, {"kind", "alpha", "twist", "label", "labels"});
  const std::string kind = string_field(j, path, "kind");
  const Rational twist = j.contains("twist") ? rational_from_json(j["twist"], path + ".twist") : Rational(0);
  const Scalar alpha = j.contains("alpha") ? scalar_from_json(j["alpha"], path + ".alpha") : Scalar(1);
  return at(path, [&] {
    if (kind == "unramified") {
      if (j.contains("label") || j.contains("labels")) fail(path, "an unramified character has no label");
      return MultChar::unramified(alpha, twist);
    }
    if (kind != "ramified") fail(path + ".kind", "unknown kind \"" + kind + "\" (expected unramified or ramified)");
    MultChar chi = MultChar::unramified(alpha, twist);
    if (j.contains("label") == j.contains("labels")) fail(path, "a ramified character needs exactly one of \"label\", \"labels\"");
    if (j.contains("label")) return chi * MultChar::ramified(string_field(j, path, "label"));
    for (const auto& [label, k] : ramified_from_json(j["labels"], path + ".labels"))
      chi = chi * MultChar::ramified(label).pow(k);
    if (chi.is_unramified()) fail(path + ".labels", "all exponents are zero");
    return chi;
  });
}

Json to_json(const AtomPtr& atom) {
  Json out{{"label", atom->label},
           {"dual_label", atom->dual_label},
           {"dim", atom->dim},
           {"central_character", to_json(atom->central_character)}};
  if (atom->dihedral != DihedralType::none) out["dihedral"] = to_string(atom->dihedral);
  if (atom->ad_support) out["ad_support"] = to_json(*atom->ad_support);
  return out;
}

AtomPtr atom_from_json(const Json& j, const std::string& path) {
  allow_keys(j, path, {"label", "dual_label", "dim", "central_character", "dihedral", "ad_support"});
  SupercuspidalAtom a;
  a.label = string_field(j, path, "label");
  a.dual_label = string_field(j, path, "dual_label");
  if (j.contains("dim")) a.dim = positive_int(j["dim"], path + ".dim");
  if (j.contains("central_character"))
    a.central_character = character_from_json(j["central_character"], path + ".central_character");
  if (j.contains("dihedral")) {
    const std::string d = string_field(j, path, "dihedral");
    a.dihedral = at(path + ".dihedral", [&] { return dihedral_type_from_string(d); });
  }
  if (j.contains("ad_support")) a.ad_support = param_from_json(j["ad_support"], path + ".ad_support");
  return at(path, [&] { return make_atom(std::move(a)); });
}

Json to_json(const WDParam& v) {
  Json out = Json::array();
  for (const auto& s : v.summands()) {
    Json r;
    r["character"] = to_json(s.character);
    if (s.atoms.size() == 1) r["atom"] = to_json(s.atoms.front());
    if (s.atoms.size() > 1) {
      r["atoms"] = Json::array();
      for (const auto& a : s.atoms) r["atoms"].push_back(to_json(a));
    }
    r["sp"] = s.sp;
    out.push_back(std::move(r));
  }
  return out;
}

WDParam param_from_json(const Json& j, const std::string& path) {
  if (j.is_string() && j.get<std::string>() == "trivial") return WDParam::character(MultChar());
  if (!j.is_array()) fail(path, "expected a list of summands or \"trivial\"");
  std::vector<Indecomposable> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(summand_from_json(j[i], path + "[" + std::to_string(i) + "]"));
  return WDParam(std::move(out));
}

Json to_json(const GammaExpr& g) {
  Json atoms = Json::array();
  for (const auto& [a, e] : g.atoms()) {
    Json c = Json::array();
    for (const auto& x : a.constituents) c.push_back(to_json(x));
    atoms.push_back(Json{{"left", a.left()},
                         {"right", a.right()},
                         {"twist", a.twist.to_string()},
                         {"exponent", e},
                         {"constituents", std::move(c)},
                         {"ramified", ramified_to_json(a.ramified)}});
  }
  return Json{{"rational", to_json(g.rational())}, {"atoms", std::move(atoms)}};
}

GammaExpr gamma_from_json(const Json& j, const std::string& path) {
  allow_keys(j, path, {"rational", "atoms"});
  GammaExpr g(laurent_from_json(field(j, path, "rational"), path + ".rational"));
  const Json& atoms = field(j, path, "atoms");
  if (!atoms.is_array()) fail(path + ".atoms", "expected a list");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const std::string p = path + ".atoms[" + std::to_string(i) + "]";
    const Json& a = atoms[i];
    allow_keys(a, p, {"left", "right", "twist", "exponent", "constituents", "ramified"});
    std::vector<AtomPtr> constituents;
    if (a.contains("constituents")) {
      if (!a["constituents"].is_array()) fail(p + ".constituents", "expected a list of atoms");
      for (std::size_t k = 0; k < a["constituents"].size(); ++k)
        constituents.push_back(atom_from_json(a["constituents"][k], p + ".constituents[" + std::to_string(k) + "]"));
    }
    std::map<std::string, int> ramified;
    if (a.contains("ramified")) ramified = ramified_from_json(a["ramified"], p + ".ramified");
    const Scalar twist = scalar_from_json(field(a, p, "twist"), p + ".twist");
    const Json& e = field(a, p, "exponent");
    if (!e.is_number_integer()) fail(p + ".exponent", "expected an integer");
    const GammaAtom atom(std::move(constituents), std::move(ramified), twist);
    for (const char* side : {"left", "right"})
      if (a.contains(side) && a[side] != (std::string(side) == "left" ? atom.left() : atom.right()))
        fail(p + "." + side, "does not match constituents and ramified");
    g *= GammaExpr::atom(atom, e.get<int>());
  }
  return g;
}

Json to_json(const G2Support& s) {
  return std::visit(
      [](const auto& d) -> Json {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, TorusSupport>) {
          return Json{{"family", "torus"}, {"chars", Json::array({to_json(d.chi1), to_json(d.chi2), to_json(d.chi3)})}};
        } else if constexpr (std::is_same_v<T, HeisenbergSupport>) {
          return Json{{"family", "heisenberg"}, {"tau", to_json(d.tau)}};
        } else if constexpr (std::is_same_v<T, NonHeisenbergSupport>) {
          return Json{{"family", "non_heisenberg"}, {"tau", to_json(d.tau)}};
        } else {
          Json out{{"family", "supercuspidal"}, {"label", d.label}};
          if (d.boxplus_source) out["boxplus_source"] = to_json(*d.boxplus_source);
          return out;
        }
      },
      s.data());
}

G2Support support_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with a \"family\" field");
  const std::string family = string_field(j, path, "family");
  if (family == "torus") {
    allow_keys(j, path, {"family", "chars"});
    const Json& chars = field(j, path, "chars");
    if (!chars.is_array() || (chars.size() != 2 && chars.size() != 3))
      fail(path + ".chars", "expected 2 or 3 characters, got " +
                                (chars.is_array() ? std::to_string(chars.size()) : std::string("a non-list")));
    std::vector<MultChar> c;
    for (std::size_t i = 0; i < chars.size(); ++i)
      c.push_back(character_from_json(chars[i], path + ".chars[" + std::to_string(i) + "]"));
    return at(path, [&] { return c.size() == 2 ? G2Support::torus(c[0], c[1]) : G2Support::torus(c[0], c[1], c[2]); });
  }
  if (family == "heisenberg" || family == "non_heisenberg") {
    allow_keys(j, path, {"family", "tau"});
    const AtomPtr tau = atom_from_json(field(j, path, "tau"), path + ".tau");
    return at(path + ".tau",
              [&] { return family == "heisenberg" ? G2Support::heisenberg(tau) : G2Support::non_heisenberg(tau); });
  }
  if (family == "supercuspidal") {
    allow_keys(j, path, {"family", "label", "boxplus_source"});
    std::optional<WDParam> source;
    if (j.contains("boxplus_source")) source = param_from_json(j["boxplus_source"], path + ".boxplus_source");
    const std::string label = string_field(j, path, "label");
    return at(path, [&] { return G2Support::supercuspidal(label, std::move(source)); });
  }
  fail(path + ".family",
       "unknown family \"" + family + "\" (expected torus, heisenberg, non_heisenberg or supercuspidal)");
}

Json to_json(const GL7Support& f) {
  Json reps = Json::array();
  for (const auto& r : f.reps) reps.push_back(to_json(WDParam({r})).front());
  return Json{{"levi", f.levi}, {"reps", std::move(reps)}};
}

Json to_json(const TwoPathReport& r, const G2Support& pi, const WDParam& rho, std::optional<std::uint64_t> seed) {
  Json out{{"path_a", r.error.empty() ? to_json(r.path_a) : Json()},
           {"path_b", r.error.empty() ? to_json(r.path_b) : Json()},
           {"equal", r.equal},
           {"support", to_json(pi)},
           {"rho", to_json(rho)},
           {"seed", seed ? Json(*seed) : Json()}};
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

}  // namespace g2gamma
