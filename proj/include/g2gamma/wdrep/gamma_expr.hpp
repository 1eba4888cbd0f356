#ifndef G2GAMMA_WDREP_GAMMA_EXPR_HPP
#define G2GAMMA_WDREP_GAMMA_EXPR_HPP

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "g2gamma/wdrep/param.hpp"

namespace g2gamma {

// Formal gamma(s, sigma_1 x ... x sigma_k x theta x nu_beta, psi) of an
// irreducible piece with no explicit formula: k opaque atoms, a ramified
// character theta and an unramified twist with value beta at varpi.
struct GammaAtom {
  std::vector<AtomPtr> constituents;  // sorted by label
  std::map<std::string, int> ramified;
  Scalar twist{1};

  GammaAtom() = default;
  GammaAtom(std::vector<AtomPtr> constituents, std::map<std::string, int> ramified, Scalar twist);

  // Descriptor halves: the first constituent, and everything else.
  std::string left() const;
  std::string right() const;
  // The atom of the contragredient piece.
  GammaAtom dual() const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const GammaAtom& a, const GammaAtom& b);
  friend std::strong_ordering operator<=>(const GammaAtom& a, const GammaAtom& b);
};

// rational_part * prod atoms^exponent. Exponents may be negative; zero
// exponents are dropped, so equality is componentwise.
class GammaExpr {
 public:
  GammaExpr() : rational_(1) {}
  explicit GammaExpr(LaurentRational rational) : rational_(std::move(rational)) {}
  static GammaExpr atom(const GammaAtom& a, int exponent = 1);

  const LaurentRational& rational() const { return rational_; }
  const std::map<GammaAtom, int>& atoms() const { return atoms_; }
  bool has_atoms() const { return !atoms_.empty(); }
  // Sum of |exponent| over atoms.
  int atom_count() const;

  GammaExpr& operator*=(const GammaExpr& o);
  GammaExpr& operator/=(const GammaExpr& o);
  friend GammaExpr operator*(GammaExpr a, const GammaExpr& b) { return a *= b; }
  friend GammaExpr operator/(GammaExpr a, const GammaExpr& b) { return a /= b; }
  GammaExpr inverse() const;
  GammaExpr pow(int e) const;

  friend bool operator==(const GammaExpr& a, const GammaExpr& b) {
    return a.atoms_ == b.atoms_ && a.rational_ == b.rational_;
  }

  // Rational part as a reduced fraction in X followed by the atom factors.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  LaurentRational rational_;
  std::map<GammaAtom, int> atoms_;
};

// gamma(1 - s) with the dual data: X -> q^{-1} X^{-1} on the rational part
// and, through gamma(s, sigma) gamma(1 - s, sigma^vee) = 1, each atom goes to
// the inverse of its dual.
GammaExpr substitute_dual(const GammaExpr& g);

}  // namespace g2gamma

#endif  // G2GAMMA_WDREP_GAMMA_EXPR_HPP
