#include "g2gamma/localchar/tate.hpp"

namespace g2gamma {

GammaExpr tate_gamma(const MultChar& chi, const AdditiveCharacter& psi) {
  require_unramified(psi);
  const Scalar& beta = chi.value();
  if (!chi.is_unramified()) return GammaExpr::atom(GammaAtom({}, chi.ramified_part(), beta));
  return GammaExpr(LaurentRational::linear(beta) / LaurentRational::dual_linear(beta.inverse() / Scalar::q()));
}

}  // namespace g2gamma
