#include "g2gamma/engine/gamma.hpp"

#include "g2gamma/errors.hpp"
#include "g2gamma/localchar/tate.hpp"
#include "g2gamma/wdrep/ops.hpp"

namespace g2gamma {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

struct CuspidalPiece {
  MultChar character;
  std::vector<AtomPtr> atoms;
};

// chi (x) sigma (x) Sp(n) -> chi |.|^{(n-1)/2 - i} (x) sigma, 0 <= i < n.
std::vector<CuspidalPiece> cuspidal_support(const Indecomposable& v) {
  std::vector<CuspidalPiece> out;
  for (int i = 0; i < v.sp; ++i) out.push_back({v.character.twisted(Rational(v.sp - 1 - 2 * i, 2)), v.atoms});
  return out;
}

GammaExpr pair_gamma(const Indecomposable& x, const Indecomposable& y, const AdditiveCharacter& psi) {
  GammaExpr out;
  for (const auto& a : cuspidal_support(x))
    for (const auto& b : cuspidal_support(y)) {
      const MultChar chi = a.character * b.character;
      if (a.atoms.empty() && b.atoms.empty()) {
        out *= tate_gamma(chi, psi);
        continue;
      }
      std::vector<AtomPtr> atoms = a.atoms;
      atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
      out *= wd_gamma(WDParam({Indecomposable(chi, std::move(atoms), 1)}), psi);
    }
  return out;
}

Indecomposable cuspidal(const MultChar& chi) { return Indecomposable(chi, {}, 1); }
Indecomposable cuspidal(const AtomPtr& tau) { return Indecomposable(MultChar(), {tau}, 1); }

// The G2-side factors of the product formula, in the order they are written.
std::vector<Indecomposable> product_formula_factors(const G2Support& pi) {
  return std::visit(
      overloaded{
          [](const TorusSupport& t) {
            return std::vector<Indecomposable>{cuspidal(MultChar()),      cuspidal(t.chi1), cuspidal(t.chi1.inverse()),
                                               cuspidal(t.chi2),          cuspidal(t.chi2.inverse()),
                                               cuspidal(t.chi3),          cuspidal(t.chi3.inverse())};
          },
          [](const HeisenbergSupport& h) {
            const MultChar& omega = h.tau->central_character;
            return std::vector<Indecomposable>{cuspidal(h.tau), cuspidal(dual(h.tau)), cuspidal(omega),
                                               cuspidal(omega.inverse()), cuspidal(MultChar())};
          },
          [](const NonHeisenbergSupport& n) {
            if (!n.tau->ad_support)
              throw IncompleteInput("non_heisenberg support: atom " + n.tau->label +
                                    " needs \"ad_support\" (the cuspidal support of Ad(tau))");
            std::vector<Indecomposable> out{cuspidal(n.tau), cuspidal(dual(n.tau))};
            for (const auto& r : n.tau->ad_support->summands()) out.push_back(r);
            return out;
          },
          [](const SupercuspidalSupport& s) -> std::vector<Indecomposable> {
            throw UnsupportedConfiguration("no product formula for the supercuspidal " + s.label);
          }},
      pi.data());
}

}  // namespace

GammaExpr gamma_via_lift(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi) {
  return rs_gamma(std_parameter(pi), rho, psi);
}

GammaExpr gamma_via_multiplicativity(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi) {
  require_unramified(psi);
  const std::vector<Indecomposable> factors = product_formula_factors(pi);
  GammaExpr out;
  for (const auto& r : rho.summands())
    for (const auto& f : factors) out *= pair_gamma(f, r, psi);
  return out;
}

GammaExpr gamma_adjoint(const G2Support& pi, const MultChar& chi, const AdditiveCharacter& psi) {
  const WDParam v = std_parameter(pi);
  const WDParam twist = WDParam::character(chi);
  return rs_gamma(exterior_square(v, true), twist, psi) / rs_gamma(v, twist, psi);
}

TwoPathReport check_two_paths(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi) {
  TwoPathReport report;
  try {
    report.path_a = gamma_via_lift(pi, rho, psi);
    report.path_b = gamma_via_multiplicativity(pi, rho, psi);
    report.equal = report.path_a == report.path_b;
  } catch (const Error& e) {
    report.error = e.what();
  }
  return report;
}

}  // namespace g2gamma
