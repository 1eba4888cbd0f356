#ifndef G2GAMMA_LOCALCHAR_CHARACTER_HPP
#define G2GAMMA_LOCALCHAR_CHARACTER_HPP

#include <compare>
#include <map>
#include <string>

#include "g2gamma/ratfun/laurent.hpp"

namespace g2gamma {

// Additive character psi of F. Only conductor exponent 0 is computable.
struct AdditiveCharacter {
  int conductor_exponent = 0;

  // psi^{-1}(x) = psi(-x) has the same conductor.
  AdditiveCharacter inverse() const { return *this; }
  friend bool operator==(const AdditiveCharacter&, const AdditiveCharacter&) = default;
};

// Throws UnsupportedConfiguration unless n(psi) = 0.
void require_unramified(const AdditiveCharacter& psi);

// Character chi of F^x, written theta * nu_alpha * |.|^t where theta is a
// product of opaque ramified characters (label -> exponent), nu_alpha the
// unramified character with nu_alpha(varpi) = alpha, and t a half-integer.
//
// Two characters are equal when their ramified parts agree and their
// unramified parts take the same value alpha q^{-t} at varpi.
class MultChar {
 public:
  MultChar() : alpha_(1), value_(1) {}

  static MultChar trivial() { return {}; }
  static MultChar unramified(const Scalar& alpha, const Rational& twist = 0);
  static MultChar ramified(const std::string& label, const Rational& twist = 0);

  bool is_unramified() const { return ramified_.empty(); }
  bool is_trivial() const { return is_unramified() && value_.is_one(); }

  const Scalar& alpha() const { return alpha_; }
  const Rational& twist() const { return twist_; }
  const std::map<std::string, int>& ramified_part() const { return ramified_; }
  // alpha q^{-t}: the value of the unramified part at varpi.
  const Scalar& value() const { return value_; }

  MultChar inverse() const;
  MultChar pow(int e) const;
  // chi |.|^t
  MultChar twisted(const Rational& t) const;
  friend MultChar operator*(const MultChar& a, const MultChar& b);

  friend bool operator==(const MultChar& a, const MultChar& b) {
    return a.ramified_ == b.ramified_ && a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const MultChar& a, const MultChar& b);

  // "1", "a", "a*|.|^1/2", "chi1^2*b".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  MultChar(std::map<std::string, int> ramified, Scalar alpha, Rational twist);

  std::map<std::string, int> ramified_;
  Scalar alpha_;
  Rational twist_;
  Scalar value_;
};

// L(s, chi): 1/(1 - alpha q^{-t} X) when unramified, 1 otherwise.
LaurentRational tate_L(const MultChar& chi);

}  // namespace g2gamma

#endif  // G2GAMMA_LOCALCHAR_CHARACTER_HPP
