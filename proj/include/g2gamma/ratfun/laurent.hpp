#ifndef G2GAMMA_RATFUN_LAURENT_HPP
#define G2GAMMA_RATFUN_LAURENT_HPP

#include <map>
#include <string>
#include <vector>

#include "g2gamma/ratfun/scalar.hpp"

namespace g2gamma {

// Dense polynomial in X over the symbol ring, lowest degree first.
class XPoly {
 public:
  XPoly() = default;
  explicit XPoly(std::vector<Scalar> coefficients);
  static XPoly one() { return XPoly({Scalar(1)}); }
  // 1 - c X
  static XPoly linear(const Scalar& c);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Scalar>& coefficients() const { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }

  XPoly operator+(const XPoly& o) const;
  XPoly operator-(const XPoly& o) const;
  XPoly operator*(const XPoly& o) const;
  XPoly scaled(const Scalar& s) const;
  XPoly shifted(int k) const;  // times X^k, k >= 0

  Scalar evaluate(const Scalar& x) const;
  // Quotient and remainder over the field of fractions of the symbol ring.
  static void divmod(const XPoly& a, const XPoly& b, XPoly& quotient, XPoly& remainder);
  XPoly exact_div(const XPoly& b) const;
  // Divides by (1 - c X) when it is a factor.
  bool divide_linear(const Scalar& c, XPoly& quotient) const;

  // Normalised to constant term 1 when that term is nonzero, monic otherwise.
  static XPoly gcd(XPoly a, XPoly b);

  friend bool operator==(const XPoly&, const XPoly&) = default;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Exponent -> coefficient map of a Laurent polynomial in X.
using LaurentPoly = std::map<int, Scalar>;

// Unique expanded representative: scale * X^shift * num / den with num and
// den coprime and both having constant term 1.
struct NormalForm {
  Scalar scale;
  int shift = 0;
  XPoly num = XPoly::one();
  XPoly den = XPoly::one();

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Rational function in X = q^{-s} over the symbol ring.
//
// Stored as scale * X^shift * prod (1 - c X)^{e_c} * num / den. The linear
// factors have pairwise distinct c, and the residual num/den is coprime with
// constant terms 1 and divisible by none of them. Products of linear
// factors, which is every explicit local factor, never expand; sums fall
// back to the residual. The value-level normal form is normal_form().
class LaurentRational {
 public:
  LaurentRational() : scale_(1) {}
  LaurentRational(const Scalar& c) : scale_(c) {}  // NOLINT(google-explicit-constructor)
  LaurentRational(long c) : scale_(c) {}  // NOLINT(google-explicit-constructor)

  static LaurentRational x_power(int k);
  // 1 - c X, c nonzero.
  static LaurentRational linear(const Scalar& c);
  // 1 - c X^{-1}, c nonzero.
  static LaurentRational dual_linear(const Scalar& c);
  // num / den; throws MalformedInput for a zero denominator.
  static LaurentRational from_laurent(const LaurentPoly& num, const LaurentPoly& den);
  static LaurentRational from_normal_form(const NormalForm& nf);

  bool is_zero() const { return scale_.is_zero(); }
  bool is_one() const;
  bool is_factored() const { return num_.is_one() && den_.is_one(); }

  const Scalar& scale() const { return scale_; }
  int shift() const { return shift_; }
  const std::map<Scalar, int>& linear_factors() const { return linear_; }
  const XPoly& residual_numerator() const { return num_; }
  const XPoly& residual_denominator() const { return den_; }

  LaurentRational operator-() const;
  LaurentRational& operator*=(const LaurentRational& o);
  LaurentRational& operator/=(const LaurentRational& o);
  friend LaurentRational operator*(LaurentRational a, const LaurentRational& b) { return a *= b; }
  friend LaurentRational operator/(LaurentRational a, const LaurentRational& b) { return a /= b; }
  friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
  friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b);

  LaurentRational inverse() const;
  LaurentRational pow(int e) const;

  NormalForm normal_form() const;
  // The normal form as an unfactored value. No gcd is needed: distinct
  // linear factors and a coprime residual expand to a coprime pair.
  LaurentRational expanded() const;
  // Degrees of the expanded numerator and denominator polynomials, monomial
  // X-powers excluded (the span of each side as a Laurent polynomial).
  int numerator_degree() const;
  int denominator_degree() const;

  // Numerator and denominator of the normal form as polynomials in X, the
  // monomial X-power moved to whichever side keeps exponents nonnegative.
  LaurentPoly numerator_terms() const;
  LaurentPoly denominator_terms() const;

  // Value equality.
  friend bool operator==(const LaurentRational& a, const LaurentRational& b);
  // Representation equality.
  bool identical(const LaurentRational& o) const;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  static LaurentRational from_fraction(int shift, XPoly num, XPoly den);
  void settle();

  Scalar scale_;
  int shift_ = 0;
  std::map<Scalar, int> linear_;
  XPoly num_ = XPoly::one();
  XPoly den_ = XPoly::one();
};

// Expanded canonical representative; idempotent.
LaurentRational normalize(const LaurentRational& f);
// X -> q^{-1} X^{-1}, i.e. s -> 1 - s.
LaurentRational substitute_dual(const LaurentRational& f);
inline bool equal(const LaurentRational& f, const LaurentRational& g) { return f == g; }

}  // namespace g2gamma

#endif  // G2GAMMA_RATFUN_LAURENT_HPP
