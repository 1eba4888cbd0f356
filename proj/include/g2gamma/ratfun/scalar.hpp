#ifndef G2GAMMA_RATFUN_SCALAR_HPP
#define G2GAMMA_RATFUN_SCALAR_HPP

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "g2gamma/ratfun/poly.hpp"

namespace g2gamma {

// Residue field size for the whole process. std::nullopt (the default) makes
// q a formal indeterminate, q = u^2. A prime power makes q numeric; u stays
// a formal square root with u^2 = q unless q is a perfect square, in which
// case u is the integer root. Set this before building any Scalar: values
// built under one setting are meaningless under another.
void set_residue_field_size(std::optional<long> q);
std::optional<long> residue_field_size();

// Names with a fixed meaning in the symbol ring.
bool is_reserved_symbol(std::string_view name);

// Element of the symbol ring: Q adjoined the formal square root u of q,
// Satake indeterminates and atom constants, closed under division.
//
// Normal form: numerator/denominator coprime, denominator with leading
// coefficient 1 in lex order. With numeric non-square q the numerator has
// u-degree at most 1 and the denominator is free of u.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar symbol(std::string_view name);
  static Scalar sqrt_q();
  static Scalar q();
  // q^t for half-integral t; anything else is an UnsupportedConfiguration.
  static Scalar q_power(const Rational& t);
  // Sum of many terms with a single normalization when all denominators
  // are monomials.
  static Scalar sum(const std::vector<Scalar>& terms);
  // u^k = q^{k/2}.
  static Scalar sqrt_q_power(long k);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
  Rational rational_value() const { return num_.constant() / den_.constant(); }
  // Numerator and denominator are single terms.
  bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  Scalar inverse() const;
  Scalar pow(long e) const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  // Parseable plain-text form, e.g. "a^2*b^-1*q^-1*u" or "(a + 1)/(a - b)".
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

// The variable standing for the square root of q.
Var sqrt_q_var();

}  // namespace g2gamma

#endif  // G2GAMMA_RATFUN_SCALAR_HPP
