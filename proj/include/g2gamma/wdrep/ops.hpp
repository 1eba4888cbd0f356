#ifndef G2GAMMA_WDREP_OPS_HPP
#define G2GAMMA_WDREP_OPS_HPP

#include <optional>
#include <vector>

#include "g2gamma/localchar/character.hpp"
#include "g2gamma/wdrep/gamma_expr.hpp"
#include "g2gamma/wdrep/param.hpp"

namespace g2gamma {

MultChar determinant(const Indecomposable& v);
MultChar determinant(const WDParam& v);

// Clebsch-Gordan on the Sp parts; atoms are concatenated into a formal
// tensor atom, characters multiplied.
WDParam tensor(const Indecomposable& a, const Indecomposable& b);
WDParam tensor(const WDParam& v, const WDParam& w);

// Lambda^2 of a 3-dimensional atom has no formula. With formal_atoms set it
// becomes a fresh atom labelled wedge2(label); otherwise it throws
// UnsupportedConfiguration like every other case without a rule.
WDParam exterior_square(const WDParam& v, bool formal_atoms = false);

// Multiset difference; std::nullopt when w is not contained in v.
std::optional<WDParam> subtract(const WDParam& v, const WDParam& w);

// L(s, chi (x) Sp(n)) = L(s + (n - 1)/2, chi); atoms contribute 1. A tensor
// of atoms containing a dual pair throws UnsupportedConfiguration, since
// its L-factor depends on data the atoms do not carry.
LaurentRational wd_L(const WDParam& v);

// Explicit epsilon L(1 - s, V^vee)/L(s, V) on unramified chi (x) Sp(n), with
// epsilon = (-chi(varpi) u X)^{n-1}; every other summand collapses onto its
// cuspidal support and becomes gamma-atoms.
GammaExpr wd_gamma(const WDParam& v, const AdditiveCharacter& psi);

GammaExpr rs_gamma(const WDParam& v, const WDParam& w, const AdditiveCharacter& psi);

// Frobenius eigenvalues on the semisimplification: chi(varpi) q^{-(n-1)/2+i}.
// Only for parameters built from unramified characters.
std::vector<Scalar> eigenvalues(const WDParam& v);

}  // namespace g2gamma

#endif  // G2GAMMA_WDREP_OPS_HPP
