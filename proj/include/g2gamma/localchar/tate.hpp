#ifndef G2GAMMA_LOCALCHAR_TATE_HPP
#define G2GAMMA_LOCALCHAR_TATE_HPP

#include "g2gamma/localchar/character.hpp"
#include "g2gamma/wdrep/gamma_expr.hpp"

namespace g2gamma {

// gamma(s, chi, psi) = epsilon L(1 - s, chi^{-1}) / L(s, chi) with n(psi) = 0.
// Unramified chi with beta = chi(varpi): (1 - beta X)/(1 - beta^{-1} q^{-1} X^{-1}).
// Ramified chi: a single formal atom.
GammaExpr tate_gamma(const MultChar& chi, const AdditiveCharacter& psi);

}  // namespace g2gamma

#endif  // G2GAMMA_LOCALCHAR_TATE_HPP
