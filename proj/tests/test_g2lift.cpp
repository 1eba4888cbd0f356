#include <algorithm>
#include <random>

#include "doctest.h"
#include "g2gamma/engine/random.hpp"
#include "g2gamma/errors.hpp"
#include "g2gamma/g2lift/support.hpp"
#include "g2gamma/ratfun/parse.hpp"
#include "g2gamma/wdrep/ops.hpp"

using namespace g2gamma;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }
MultChar U(const char* alpha) { return MultChar::unramified(S(alpha)); }

AtomPtr gl2(const std::string& label, MultChar omega, DihedralType type = DihedralType::none,
            std::optional<WDParam> ad = std::nullopt) {
  SupercuspidalAtom a;
  a.label = label;
  a.dual_label = label + "_dual";
  a.central_character = std::move(omega);
  a.dihedral = type;
  a.ad_support = std::move(ad);
  return make_atom(std::move(a));
}

AtomPtr gl3(const std::string& label) {
  SupercuspidalAtom a;
  a.label = label;
  a.dual_label = label;
  a.dim = 3;
  return make_atom(std::move(a));
}

WDParam chars(std::initializer_list<const char*> alphas) {
  WDParam v;
  for (const char* a : alphas) v += WDParam::character(U(a));
  return v;
}

std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("torus supports enforce chi1 chi2 chi3 = 1") {
  set_residue_field_size(std::nullopt);
  CHECK_NOTHROW(G2Support::torus(U("a"), U("b"), U("a^-1*b^-1")));
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    const MultChar a = random_unramified_character(rng), b = random_unramified_character(rng);
    MultChar c = (a * b).inverse() * random_unramified_character(rng);
    if ((a * b * c).is_trivial()) continue;
    CHECK_THROWS_AS(G2Support::torus(a, b, c), MalformedInput);
  }
  const G2Support t = G2Support::torus(U("a"), U("b"));
  CHECK(t.family() == "torus");
  CHECK(std::get<TorusSupport>(t.data()).chi3 == U("a^-1*b^-1"));
}

TEST_CASE("standard parameter of a torus support") {
  set_residue_field_size(std::nullopt);
  const G2Support t = G2Support::torus(U("a"), U("b"));
  const WDParam v = std_parameter(t);
  CHECK(v == chars({"a", "b", "a^-1*b^-1", "1", "a*b", "b^-1", "a^-1"}));
  CHECK(v.dual() == v);
  const std::vector<Scalar> e = eigenvalues(v);
  CHECK(std::count(e.begin(), e.end(), Scalar(1)) >= 1);
  std::vector<Scalar> inverted;
  for (const Scalar& s : e) inverted.push_back(s.inverse());
  CHECK(sorted(inverted) == sorted(e));
}

TEST_CASE("standard parameters of parabolic supports") {
  set_residue_field_size(std::nullopt);
  const AtomPtr tau = gl2("tau", U("w"));
  const WDParam h = std_parameter(G2Support::heisenberg(tau));
  CHECK(h == WDParam::atom(tau) + WDParam::atom(dual(tau)) + chars({"w", "w^-1", "1"}));
  CHECK(h.dim() == 7);
  CHECK_THROWS_AS(std_parameter(G2Support::non_heisenberg(tau)), IncompleteInput);
  const AtomPtr tau3 = gl2("tau", U("w"), DihedralType::dihedral_3, chars({"x", "x^-1", "1"}));
  CHECK(std_parameter(G2Support::non_heisenberg(tau3)) ==
        WDParam::atom(tau3) + WDParam::atom(dual(tau3)) + chars({"x", "x^-1", "1"}));
  CHECK_THROWS_AS(G2Support::heisenberg(gl3("s")), MalformedInput);
}

TEST_CASE("boxplus") {
  set_residue_field_size(std::nullopt);
  const AtomPtr sigma = gl3("sigma");
  const WDParam v = std_parameter(G2Support::supercuspidal("pi", WDParam::atom(sigma)));
  CHECK(v == WDParam::atom(sigma) + WDParam::character(MultChar()) + WDParam::atom(dual(sigma)));
  CHECK(v.dim() == 7);
  CHECK(boxplus(chars({"a", "b", "c"})) == chars({"a", "b", "c", "1", "a^-1", "b^-1", "c^-1"}));
  CHECK_THROWS_AS(std_parameter(G2Support::supercuspidal("pi")), UnsupportedConfiguration);
  CHECK_THROWS_AS(G2Support::supercuspidal("pi", chars({"a"})), MalformedInput);
}

TEST_CASE("support map f") {
  set_residue_field_size(std::nullopt);
  const GL7Support t = map_f(G2Support::torus(U("a"), U("b")));
  CHECK(t.levi == std::vector<int>(7, 1));
  const AtomPtr tau = gl2("tau", U("w"));
  const GL7Support h = map_f(G2Support::heisenberg(tau));
  CHECK(h.levi == std::vector<int>{2, 2, 1, 1, 1});
  CHECK(h.reps[1].atoms.front()->label == "tau_dual");
  CHECK(h.reps[2].character == U("w"));
  CHECK(h.reps[3].character == U("w^-1"));

  const AtomPtr nd = gl2("tau", U("w"), DihedralType::non_dihedral, WDParam::atom(gl3("ad")));
  CHECK(map_f(G2Support::non_heisenberg(nd)).levi == std::vector<int>{2, 2, 3});
  const AtomPtr d1 = gl2("tau", U("w"), DihedralType::dihedral_1,
                         WDParam::atom(gl2("t2", U("-1"))) + WDParam::character(U("-1")));
  CHECK(map_f(G2Support::non_heisenberg(d1)).levi == std::vector<int>{2, 2, 2, 1});
  const AtomPtr d3 = gl2("tau", U("w"), DihedralType::dihedral_3, chars({"-1", "x", "-x^-1"}));
  CHECK(map_f(G2Support::non_heisenberg(d3)).levi == std::vector<int>{2, 2, 1, 1, 1});
  CHECK_THROWS_AS(map_f(G2Support::supercuspidal("pi", WDParam::atom(gl3("s")))), UnsupportedConfiguration);

  // Flattening f agrees with std on every non-supercuspidal family.
  for (const G2Support& s : {G2Support::torus(U("a"), U("b")), G2Support::heisenberg(tau),
                             G2Support::non_heisenberg(nd), G2Support::non_heisenberg(d1),
                             G2Support::non_heisenberg(d3)}) {
    const GL7Support f = map_f(s);
    int total = 0;
    for (std::size_t i = 0; i < f.levi.size(); ++i) {
      total += f.levi[i];
      CHECK(f.reps[i].dim() == f.levi[i]);
    }
    CHECK(total == 7);
    CHECK(f.flatten() == std_parameter(s));
  }
}

TEST_CASE("adjoint parameter") {
  set_residue_field_size(std::nullopt);
  const WDParam trivial = ad_parameter(G2Support::torus(MultChar(), MultChar()));
  CHECK(trivial == WDParam(std::vector<Indecomposable>(14, Indecomposable(MultChar(), {}, 1))));
  CHECK(ad_parameter(G2Support::torus(U("a"), U("b"))) ==
        chars({"a", "b", "a^-1*b^-1", "a^-1", "b^-1", "a*b", "a/b", "b/a", "a^2*b", "a^-2*b^-1", "a*b^2",
               "a^-1*b^-2", "1", "1"}));
  const AtomPtr tau = gl2("tau", U("w"));
  CHECK(ad_parameter(G2Support::heisenberg(tau)).dim() == 14);
}
