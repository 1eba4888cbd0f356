#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "g2gamma/cli/run.hpp"
#include "g2gamma/engine/random.hpp"
#include "g2gamma/errors.hpp"
#include "g2gamma/io/json.hpp"
#include "g2gamma/ratfun/parse.hpp"
#include "g2gamma/wdrep/ops.hpp"

using namespace g2gamma;

namespace {

const AdditiveCharacter psi;

MultChar U(const char* alpha) { return MultChar::unramified(parse_scalar(alpha)); }

AtomPtr tau_atom() {
  SupercuspidalAtom a;
  a.label = "tau";
  a.dual_label = "tau_dual";
  a.central_character = U("w");
  a.dihedral = DihedralType::dihedral_3;
  a.ad_support = WDParam::character(U("x")) + WDParam::character(U("x^-1")) + WDParam::character(MultChar());
  return make_atom(std::move(a));
}

struct Result {
  int code;
  std::string out, err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "g2gamma");
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(args.size()), args.data(), out, err);
  set_residue_field_size(std::nullopt);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("values round-trip through JSON") {
  set_residue_field_size(std::nullopt);
  const Scalar s = parse_scalar("(a + u)/(b - 1)");
  CHECK(scalar_from_json(to_json(s), "s") == s);
  const LaurentRational f = LaurentRational::linear(s) / LaurentRational::dual_linear(parse_scalar("q^-1"));
  CHECK(laurent_from_json(to_json(f), "f") == f);
  for (const MultChar& chi : {U("a"), MultChar::unramified(parse_scalar("a"), Rational(1, 2)), MultChar::ramified("chi1"),
                              MultChar::ramified("chi1").pow(2) * MultChar::ramified("chi2") * U("b")})
    CHECK(character_from_json(to_json(chi), "chi") == chi);
  const AtomPtr tau = tau_atom();
  const WDParam v = WDParam::atom(tau, U("a")) + WDParam::character(U("b"), 3) +
                    tensor(WDParam::atom(tau), WDParam::atom(dual(tau)));
  CHECK(param_from_json(to_json(v), "rho") == v);
  const G2Support h = G2Support::non_heisenberg(tau);
  CHECK(to_json(support_from_json(to_json(h), "pi")) == to_json(h));
  const G2Support t = G2Support::torus(U("a"), U("b"));
  CHECK(to_json(support_from_json(to_json(t), "pi")) == to_json(t));
}

TEST_CASE("gamma expressions round-trip through JSON") {
  set_residue_field_size(std::nullopt);
  std::mt19937_64 rng(31);
  for (int k = 0; k < 20; ++k) {
    const GammaExpr g = gamma_via_lift(random_torus_support(rng), random_parameter(rng, 1 + k % 3), psi);
    const Json j = to_json(g);
    CHECK(gamma_from_json(j, "g") == g);
    CHECK(gamma_from_json(parse_json(j.dump(), "text"), "g") == g);
  }
  const GammaExpr a = gamma_adjoint(G2Support::heisenberg(tau_atom()), U("c"), psi);
  CHECK(gamma_from_json(to_json(a), "g") == a);
}

TEST_CASE("schema errors name the offending field") {
  set_residue_field_size(std::nullopt);
  auto message = [](const std::string& text) {
    try {
      support_from_json(parse_json(text, "pi"), "pi");
    } catch (const MalformedInput& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(R"({"family":"torus","chars":["a"]})").find("pi.chars: expected 2 or 3") == 0);
  CHECK(message(R"({"family":"torus","chars":["a","b","c"]})").find("pi: torus support needs") == 0);
  CHECK(message(R"({"family":"torus","chars":["a",{"kind":"odd"}]})").find("pi.chars[1].kind") == 0);
  CHECK(message(R"({"family":"heisenberg","tau":{"label":"t","dual_label":"t_d","dim":3}})").find("pi.tau") == 0);
  CHECK(message(R"({"family":"torus","chars":["a","(b"]})").find("pi.chars[1]") == 0);
  CHECK(message(R"({"family":"torus","chars":["a","b"],"extra":1})").find("pi.extra: unknown field") == 0);
  CHECK(message("{\n  \"family\": torus\n}").find("pi: invalid JSON at line 2") == 0);
}

TEST_CASE("command line") {
  const char* torus = R"({"family":"torus","chars":["a","b"]})";
  const Result text = invoke({"--pi", torus, "--rho", "trivial", "--format", "text"});
  CHECK(text.code == cli::ok);
  CHECK(text.out.find("/(1 + ") != std::string::npos);
  const Result json = invoke({"--pi", torus, "--format", "json"});
  REQUIRE(json.code == cli::ok);
  set_residue_field_size(std::nullopt);
  CHECK(gamma_from_json(parse_json(json.out, "out"), "g") ==
        gamma_via_lift(G2Support::torus(U("a"), U("b")), WDParam::character(MultChar()), psi));
  CHECK(invoke({"--pi", torus, "--format", "json"}).out == json.out);

  const Result suite = invoke({"--check", "--seed", "42", "--instances", "30"});
  CHECK(suite.code == cli::ok);
  CHECK(suite.out.find("30/30 equal") != std::string::npos);

  CHECK(invoke({"--pi", "{\"family\":"}).code == cli::schema_error);
  CHECK(invoke({"--pi", R"({"family":"cube"})"}).code == cli::schema_error);
  CHECK(invoke({"--pi", torus, "--format", "pdf"}).code == cli::schema_error);
  CHECK(invoke({"--pi", torus, "--q", "6"}).code == cli::schema_error);
  CHECK(invoke({"--pi", R"({"family":"supercuspidal","label":"p"})"}).code == cli::unsupported);
  const Result missing = invoke({"--pi", R"({"family":"non_heisenberg","tau":{"label":"t","dual_label":"t_d"}})"});
  CHECK(missing.code == cli::schema_error);
  CHECK(missing.err.find("ad_support") != std::string::npos);
  CHECK(invoke({"--no-such-flag"}).code == cli::schema_error);
  CHECK(invoke({"--pi", torus, "--q", "7", "--adjoint", "--chi", "d"}).code == cli::ok);
  CHECK(invoke({"--pi", torus, "--L"}).code == cli::ok);
}
