#ifndef G2GAMMA_RATFUN_POLY_HPP
#define G2GAMMA_RATFUN_POLY_HPP

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace g2gamma {

using Rational = mpq_class;

// An interned indeterminate. Two Vars compare by name, never by interning
// order, so canonical forms are stable across runs and threads.
class Var {
 public:
  Var() = default;
  static Var intern(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Var a, Var b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Var a, Var b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    const int c = a.name_->compare(*b.name_);
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  explicit Var(const std::string* name) : name_(name) {}
  const std::string* name_ = nullptr;
};

// Sparse power product, sorted by variable, all exponents positive.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(Var v, int exponent = 1);

  const std::vector<std::pair<Var, int>>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  int degree(Var v) const;
  int total_degree() const;

  Monomial operator*(const Monomial& other) const;
  // Requires divides(other, *this).
  Monomial operator/(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial without(Var v) const;

  static Monomial gcd(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<Var, int>> powers_;
};

// Lexicographic term order, variables ranked by name.
std::strong_ordering lex_compare(const Monomial& a, const Monomial& b);

struct MonomialGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_compare(a, b) > 0; }
};

// Multivariate polynomial over Q with the leading term first.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, MonomialGreater>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c, Monomial m);
  static Poly variable(Var v, int exponent = 1);
  // Zero coefficients are dropped.
  static Poly from_terms(Terms terms);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Constant term value; only meaningful when is_constant().
  Rational constant() const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  bool contains(Var v) const;
  int degree(Var v) const;
  // Smallest variable occurring, if any.
  bool main_variable(Var& out) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scaled(const Rational& c) const;
  Poly times(const Monomial& m) const;
  Poly pow(int e) const;

  // Coefficients of v^k, keyed by k.
  std::map<int, Poly> coefficients_in(Var v) const;
  static Poly from_coefficients(Var v, const std::map<int, Poly>& coeffs);

  // Replaces v^2 by `square` everywhere.
  Poly reduce_square(Var v, const Rational& square) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const Monomial& m, const Rational& c);
  Terms terms_;
};

std::strong_ordering compare(const Poly& a, const Poly& b);

// Exact quotient; throws InternalConsistency if the division leaves a remainder.
Poly exact_divide(const Poly& a, const Poly& b);
bool try_divide(const Poly& a, const Poly& b, Poly& quotient);

// Greatest common divisor over Q, normalised to leading coefficient 1.
Poly gcd(const Poly& a, const Poly& b);

// Scales so the leading coefficient is 1; returns the factor divided out.
Rational make_monic(Poly& p);

}  // namespace g2gamma

#endif  // G2GAMMA_RATFUN_POLY_HPP
