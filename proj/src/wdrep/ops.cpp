#include "g2gamma/wdrep/ops.hpp"

#include <algorithm>

#include "g2gamma/errors.hpp"

namespace g2gamma {

namespace {

// The value of chi |.|^{(n-1)/2 - i}, 0 <= i < n.
Scalar shifted_value(const MultChar& chi, int n, int i) {
  return chi.value() * Scalar::q_power(-Rational(n - 1 - 2 * i, 2));
}

AtomPtr wedge2_atom(const AtomPtr& sigma) {
  SupercuspidalAtom w;
  w.label = "wedge2(" + sigma->label + ")";
  w.dual_label = "wedge2(" + sigma->dual_label + ")";
  w.dim = sigma->dim * (sigma->dim - 1) / 2;
  w.central_character = sigma->central_character.pow(sigma->dim - 1);
  return make_atom(std::move(w));
}

WDParam exterior_square(const Indecomposable& s, bool formal_atoms) {
  const MultChar chi2 = s.character.pow(2);
  if (s.atoms.empty()) {
    std::vector<Indecomposable> out;
    for (int j = 1; j <= s.sp - 1; j += 2) out.emplace_back(chi2, std::vector<AtomPtr>{}, 2 * s.sp - 1 - 2 * j);
    return WDParam(std::move(out));
  }
  if (s.atoms.size() == 1 && s.sp == 1) {
    const AtomPtr& sigma = s.atoms.front();
    if (sigma->dim == 1) return WDParam();
    if (sigma->dim == 2) return WDParam::character(sigma->central_character * chi2);
    if (sigma->dim == 3 && formal_atoms) return WDParam::atom(wedge2_atom(sigma), chi2);
    throw UnsupportedConfiguration("exterior square of the " + std::to_string(sigma->dim) + "-dimensional atom " +
                                   sigma->label + " (only atoms of dimension at most 2 have a rule)");
  }
  throw UnsupportedConfiguration("exterior square of [" + s.to_string() + "]");
}

}  // namespace

MultChar determinant(const Indecomposable& v) {
  int atom_dim = 1;
  for (const auto& a : v.atoms) atom_dim *= a->dim;
  MultChar d = v.character.pow(atom_dim);
  for (const auto& a : v.atoms) d = d * a->central_character.pow(atom_dim / a->dim);
  return d.pow(v.sp);
}

MultChar determinant(const WDParam& v) {
  MultChar d;
  for (const auto& s : v.summands()) d = d * determinant(s);
  return d;
}

WDParam tensor(const Indecomposable& a, const Indecomposable& b) {
  const MultChar chi = a.character * b.character;
  std::vector<AtomPtr> atoms = a.atoms;
  atoms.insert(atoms.end(), b.atoms.begin(), b.atoms.end());
  std::vector<Indecomposable> out;
  for (int j = 0; j < std::min(a.sp, b.sp); ++j) out.emplace_back(chi, atoms, a.sp + b.sp - 1 - 2 * j);
  return WDParam(std::move(out));
}

WDParam tensor(const WDParam& v, const WDParam& w) {
  WDParam out;
  for (const auto& a : v.summands())
    for (const auto& b : w.summands()) out += tensor(a, b);
  return out;
}

WDParam exterior_square(const WDParam& v, bool formal_atoms) {
  WDParam out;
  const auto& s = v.summands();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += exterior_square(s[i], formal_atoms);
    for (std::size_t j = i + 1; j < s.size(); ++j) out += tensor(s[i], s[j]);
  }
  return out;
}

std::optional<WDParam> subtract(const WDParam& v, const WDParam& w) {
  std::vector<Indecomposable> rest = v.summands();
  for (const auto& s : w.summands()) {
    const auto it = std::find(rest.begin(), rest.end(), s);
    if (it == rest.end()) return std::nullopt;
    rest.erase(it);
  }
  return WDParam(std::move(rest));
}

LaurentRational wd_L(const WDParam& v) {
  LaurentRational out(1);
  for (const auto& s : v.summands()) {
    for (std::size_t i = 0; i < s.atoms.size(); ++i)
      for (std::size_t j = i + 1; j < s.atoms.size(); ++j)
        if (s.atoms[i]->dual_label == s.atoms[j]->label)
          throw UnsupportedConfiguration("L-factor of [" + s.to_string() + "], which pairs an atom with its dual");
    if (s.is_unramified()) out /= LaurentRational::linear(shifted_value(s.character, s.sp, 0));
  }
  return out;
}

GammaExpr wd_gamma(const WDParam& v, const AdditiveCharacter& psi) {
  require_unramified(psi);
  GammaExpr out;
  for (const auto& s : v.summands()) {
    if (s.is_unramified()) {
      const WDParam piece({s});
      const int n = s.sp;
      const LaurentRational epsilon =
          LaurentRational(-s.character.value() * Scalar::sqrt_q()).pow(n - 1) * LaurentRational::x_power(n - 1);
      out *= GammaExpr(epsilon * substitute_dual(wd_L(piece.dual())) / wd_L(piece));
      continue;
    }
    for (int i = 0; i < s.sp; ++i)
      out *= GammaExpr::atom(GammaAtom(s.atoms, s.character.ramified_part(), shifted_value(s.character, s.sp, i)));
  }
  return out;
}

GammaExpr rs_gamma(const WDParam& v, const WDParam& w, const AdditiveCharacter& psi) {
  return wd_gamma(tensor(v, w), psi);
}

std::vector<Scalar> eigenvalues(const WDParam& v) {
  std::vector<Scalar> out;
  for (const auto& s : v.summands()) {
    if (!s.is_unramified()) throw UnsupportedConfiguration("eigenvalues of the non-unramified summand [" + s.to_string() + "]");
    for (int i = 0; i < s.sp; ++i) out.push_back(shifted_value(s.character, s.sp, i));
  }
  return out;
}

}  // namespace g2gamma
