#include "g2gamma/ratfun/scalar.hpp"

#include <atomic>
#include <sstream>
#include <vector>

#include "g2gamma/errors.hpp"

namespace g2gamma {

namespace {

// 0 means symbolic.
std::atomic<long> g_q{0};
std::atomic<long> g_sqrt_q{0};  // integer root when q is a perfect square

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

long integer_sqrt(long q) {
  long r = 0;
  while ((r + 1) * (r + 1) <= q) ++r;
  return r * r == q ? r : 0;
}

}  // namespace

void set_residue_field_size(std::optional<long> q) {
  if (!q) {
    g_q = 0;
    g_sqrt_q = 0;
    return;
  }
  if (!is_prime_power(*q))
    throw MalformedInput("residue field size must be a prime power, got " + std::to_string(*q));
  g_q = *q;
  g_sqrt_q = integer_sqrt(*q);
}

std::optional<long> residue_field_size() {
  const long q = g_q;
  if (q == 0) return std::nullopt;
  return q;
}

bool is_reserved_symbol(std::string_view name) { return name == "u" || name == "q" || name == "X"; }

Var sqrt_q_var() {
  static const Var u = Var::intern("u");
  return u;
}

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

Scalar Scalar::symbol(std::string_view name) {
  if (name.empty() || is_reserved_symbol(name))
    throw MalformedInput("'" + std::string(name) + "' cannot be used as a symbol name");
  Scalar s;
  s.num_ = Poly::variable(Var::intern(name));
  return s;
}

Scalar Scalar::sqrt_q() {
  if (const long r = g_sqrt_q; r != 0) return Scalar(r);
  return Scalar(Poly::variable(sqrt_q_var()), Poly(1));
}

Scalar Scalar::q() {
  if (const long q = g_q; q != 0) return Scalar(q);
  return Scalar(Poly::variable(sqrt_q_var(), 2), Poly(1));
}

Scalar Scalar::sqrt_q_power(long k) { return sqrt_q().pow(k); }

Scalar Scalar::q_power(const Rational& t) {
  Rational twice = 2 * t;
  twice.canonicalize();
  if (twice.get_den() != 1)
    throw UnsupportedConfiguration("twist exponent " + t.get_str() + " is not half-integral");
  return sqrt_q_power(twice.get_num().get_si());
}

void Scalar::normalize() {
  if (den_.is_zero()) throw MalformedInput("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  const long q = g_q;
  if (q != 0) {
    const Var u = sqrt_q_var();
    num_ = num_.reduce_square(u, q);
    den_ = den_.reduce_square(u, q);
    if (den_.contains(u)) {
      auto parts = den_.coefficients_in(u);
      const Poly d0 = parts.count(0) ? parts[0] : Poly();
      const Poly d1 = parts.count(1) ? parts[1] : Poly();
      const Poly conj = d0 - d1 * Poly::variable(u);
      num_ = (num_ * conj).reduce_square(u, q);
      den_ = d0 * d0 - (d1 * d1).scaled(q);
      if (den_.is_zero()) throw MalformedInput("zero denominator");
    }
  }
  if (den_.is_constant()) {
    num_ = num_.scaled(1 / den_.constant());
    den_ = Poly(1);
    return;
  }
  if (den_.is_monomial()) {
    Monomial g = den_.leading_monomial();
    for (const auto& [m, c] : num_.terms()) {
      if (g.is_one()) break;
      g = Monomial::gcd(g, m);
    }
    if (!g.is_one()) {
      Poly::Terms reduced;
      for (const auto& [m, c] : num_.terms()) reduced.emplace(m / g, c);
      num_ = Poly::from_terms(std::move(reduced));
      den_ = Poly(den_.leading_coefficient(), den_.leading_monomial() / g);
    }
  } else if (const Poly g = gcd(num_, den_); !g.is_one()) {
    num_ = exact_divide(num_, g);
    den_ = exact_divide(den_, g);
  }
  const Rational lc = make_monic(den_);
  if (lc != 1) num_ = num_.scaled(1 / lc);
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else if (den_.is_monomial() && o.den_.is_monomial()) {
    const Monomial& a = den_.leading_monomial();
    const Monomial& b = o.den_.leading_monomial();
    const Monomial l = a * (b / Monomial::gcd(a, b));
    num_ = num_.times(l / a) + o.num_.times(l / b);
    den_ = Poly(1, l);
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar Scalar::sum(const std::vector<Scalar>& terms) {
  Scalar out;
  for (const auto& t : terms)
    if (!t.den_.is_monomial()) {
      for (const auto& s : terms) out += s;
      return out;
    }
  Monomial l;
  for (const auto& t : terms) {
    const Monomial& d = t.den_.leading_monomial();
    l = l * (d / Monomial::gcd(l, d));
  }
  for (const auto& t : terms) {
    const Monomial m = l / t.den_.leading_monomial();
    if (m.is_one())
      out.num_ += t.num_;
    else
      out.num_ += t.num_.times(m);
  }
  out.den_ = Poly(1, l);
  out.normalize();
  return out;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.is_rational()) {
    num_ = num_.scaled(o.rational_value());
    return *this;
  }
  if (is_rational()) {
    const Rational c = rational_value();
    *this = o;
    num_ = num_.scaled(c);
    return *this;
  }
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw MalformedInput("division by zero in the symbol ring");
  return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  if (num_.is_monomial() && den_.is_monomial() && g_q == 0) {
    Monomial n, d;
    for (long i = 0; i < e; ++i) {
      n = n * num_.leading_monomial();
      d = d * den_.leading_monomial();
    }
    mpz_class a, b;
    mpz_pow_ui(a.get_mpz_t(), num_.leading_coefficient().get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(b.get_mpz_t(), num_.leading_coefficient().get_den_mpz_t(), static_cast<unsigned long>(e));
    Scalar out;
    out.num_ = Poly(Rational(a, b), std::move(n));
    out.den_ = Poly(Rational(1), std::move(d));
    return out;
  }
  Scalar out(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  if (auto c = compare(a.num_, b.num_); c != 0) return c;
  return compare(a.den_, b.den_);
}

// ---------------------------------------------------------------- printing

namespace {

using SignedPowers = std::vector<std::pair<Var, int>>;

SignedPowers signed_powers(const Monomial& num, const Monomial* den) {
  SignedPowers out(num.powers().begin(), num.powers().end());
  if (!den) return out;
  for (const auto& [v, e] : den->powers()) {
    auto it = out.begin();
    while (it != out.end() && it->first < v) ++it;
    if (it != out.end() && it->first == v) {
      it->second -= e;
      if (it->second == 0) out.erase(it);
    } else {
      out.insert(it, {v, -e});
    }
  }
  return out;
}

// Splits u^e into q^k * u^r with r in {0, 1}.
std::pair<int, int> split_sqrt_q(int e) {
  const int k = e >= 0 ? e / 2 : -((-e + 1) / 2);
  return {k, e - 2 * k};
}

std::string plain_factors(const SignedPowers& powers) {
  std::string out;
  auto append = [&](const std::string& name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += name;
    if (e != 1) out += '^' + std::to_string(e);
  };
  for (const auto& [v, e] : powers) {
    if (v == sqrt_q_var()) {
      const auto [k, r] = split_sqrt_q(e);
      append("q", k);
      append("u", r);
    } else {
      append(v.name(), e);
    }
  }
  return out;
}

std::string latex_factors(const SignedPowers& powers) {
  std::string out;
  auto append = [&](const std::string& base, const std::string& exponent) {
    if (!out.empty()) out += ' ';
    out += base;
    if (!exponent.empty()) out += "^{" + exponent + "}";
  };
  for (const auto& [v, e] : powers) {
    if (v == sqrt_q_var()) {
      if (e % 2 == 0)
        append("q", e == 2 ? "" : std::to_string(e / 2));
      else
        append("q", std::to_string(e) + "/2");
    } else {
      append(v.name(), e == 1 ? "" : std::to_string(e));
    }
  }
  return out;
}

std::string latex_rational(const Rational& c) {
  if (c.get_den() == 1) return c.get_num().get_str();
  return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

template <class Factors, class Coeff>
std::string render_terms(const Poly& p, const Monomial* den, Factors factors, Coeff coeff, const char* times) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    const std::string f = factors(signed_powers(m, den));
    std::string term;
    if (f.empty())
      term = coeff(mag);
    else if (mag == 1)
      term = f;
    else
      term = coeff(mag) + times + f;
    if (first)
      out += negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string Scalar::to_string() const {
  auto coeff = [](const Rational& c) { return c.get_str(); };
  if (den_.is_one()) return render_terms(num_, nullptr, plain_factors, coeff, "*");
  if (den_.is_monomial()) return render_terms(num_, &den_.leading_monomial(), plain_factors, coeff, "*");
  return "(" + render_terms(num_, nullptr, plain_factors, coeff, "*") + ")/(" +
         render_terms(den_, nullptr, plain_factors, coeff, "*") + ")";
}

std::string Scalar::to_latex() const {
  auto factors = [](const SignedPowers& p) {
    if (g_q != 0) {
      // With numeric q the square root keeps its radical form.
      SignedPowers rest;
      std::string root;
      for (const auto& [v, e] : p) {
        if (v == sqrt_q_var())
          root = "\\sqrt{" + std::to_string(g_q.load()) + "}" + (e == 1 ? "" : "^{" + std::to_string(e) + "}");
        else
          rest.emplace_back(v, e);
      }
      std::string s = latex_factors(rest);
      if (!root.empty()) s = s.empty() ? root : s + " " + root;
      return s;
    }
    return latex_factors(p);
  };
  if (den_.is_one()) return render_terms(num_, nullptr, factors, latex_rational, " ");
  if (den_.is_monomial()) return render_terms(num_, &den_.leading_monomial(), factors, latex_rational, " ");
  return "\\frac{" + render_terms(num_, nullptr, factors, latex_rational, " ") + "}{" +
         render_terms(den_, nullptr, factors, latex_rational, " ") + "}";
}

}  // namespace g2gamma
