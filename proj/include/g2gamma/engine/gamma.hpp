#ifndef G2GAMMA_ENGINE_GAMMA_HPP
#define G2GAMMA_ENGINE_GAMMA_HPP

#include <string>

#include "g2gamma/g2lift/support.hpp"
#include "g2gamma/wdrep/gamma_expr.hpp"

namespace g2gamma {

// gamma(s, pi x rho, psi) := gamma(s, Lif(pi) x rho, psi), through the
// Rankin-Selberg factor of std o phi_pi against rho.
GammaExpr gamma_via_lift(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi);

// The product formula of the support family, applied to each summand of rho
// separately. Factors are evaluated on cuspidal supports, so this path never
// uses the Clebsch-Gordan rule or the explicit epsilon of Sp(n).
//   torus:          gamma(rho) prod_i gamma(chi_i x rho) gamma(chi_i^{-1} x rho)
//   heisenberg:     gamma(tau x rho) gamma(tau^vee x rho) gamma(omega x rho)
//                   gamma(omega^{-1} x rho) gamma(rho)
//   non_heisenberg: gamma(tau x rho) gamma(tau^vee x rho) gamma(rho_tau x rho)
GammaExpr gamma_via_multiplicativity(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi);

// gamma(s, Lif(pi), Lambda^2 x chi) / gamma(s, Lif(pi) x chi). Lambda^2 of a
// 3-dimensional atom stays a formal wedge2 atom.
GammaExpr gamma_adjoint(const G2Support& pi, const MultChar& chi, const AdditiveCharacter& psi);

struct TwoPathReport {
  GammaExpr path_a;  // via the lift
  GammaExpr path_b;  // via multiplicativity
  bool equal = false;
  std::string error;  // set when a path threw
};

// Never throws for library errors; they land in report.error.
TwoPathReport check_two_paths(const G2Support& pi, const WDParam& rho, const AdditiveCharacter& psi);

}  // namespace g2gamma

#endif  // G2GAMMA_ENGINE_GAMMA_HPP
