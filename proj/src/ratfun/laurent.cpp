#include "g2gamma/ratfun/laurent.hpp"

#include <algorithm>

#include "g2gamma/errors.hpp"

namespace g2gamma {

// ------------------------------------------------------------------- XPoly

XPoly::XPoly(std::vector<Scalar> coefficients) : c_(std::move(coefficients)) { trim(); }

XPoly XPoly::linear(const Scalar& c) { return XPoly({Scalar(1), -c}); }

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

XPoly XPoly::operator+(const XPoly& o) const {
  std::vector<Scalar> out(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
  return XPoly(std::move(out));
}

XPoly XPoly::operator-(const XPoly& o) const { return *this + o.scaled(Scalar(-1)); }

XPoly XPoly::operator*(const XPoly& o) const {
  if (is_zero() || o.is_zero()) return XPoly();
  if (is_one()) return o;
  if (o.is_one()) return *this;
  std::vector<Scalar> out(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      if (!o.c_[j].is_zero()) out[i + j] += c_[i] * o.c_[j];
    }
  }
  return XPoly(std::move(out));
}

XPoly XPoly::scaled(const Scalar& s) const {
  if (s.is_one()) return *this;
  std::vector<Scalar> out = c_;
  for (auto& x : out) x *= s;
  return XPoly(std::move(out));
}

XPoly XPoly::shifted(int k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<Scalar> out(static_cast<std::size_t>(k));
  out.insert(out.end(), c_.begin(), c_.end());
  return XPoly(std::move(out));
}

Scalar XPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

void XPoly::divmod(const XPoly& a, const XPoly& b, XPoly& quotient, XPoly& remainder) {
  if (b.is_zero()) throw MalformedInput("polynomial division by zero");
  remainder = a;
  if (a.degree() < b.degree()) {
    quotient = XPoly();
    return;
  }
  std::vector<Scalar> q(a.c_.size() - b.c_.size() + 1);
  const Scalar inv_lead = b.c_.back().inverse();
  while (!remainder.is_zero() && remainder.degree() >= b.degree()) {
    const std::size_t k = remainder.c_.size() - b.c_.size();
    const Scalar t = remainder.c_.back() * inv_lead;
    q[k] = t;
    for (std::size_t j = 0; j < b.c_.size(); ++j) remainder.c_[j + k] -= b.c_[j] * t;
    remainder.c_.back() = Scalar();
    remainder.trim();
  }
  quotient = XPoly(std::move(q));
}

XPoly XPoly::exact_div(const XPoly& b) const {
  XPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) throw InternalConsistency("polynomial division in X is not exact");
  return q;
}

bool XPoly::divide_linear(const Scalar& c, XPoly& quotient) const {
  if (degree() < 1) return false;
  if (!evaluate(c.inverse()).is_zero()) return false;
  // Synthetic division by 1 - cX: q_0 = p_0, q_k = p_k + c q_{k-1}.
  const std::size_t n = c_.size() - 1;
  std::vector<Scalar> out(n);
  out[0] = c_[0];
  for (std::size_t k = 1; k < n; ++k) out[k] = c_[k] + c * out[k - 1];
  quotient = XPoly(std::move(out));
  return true;
}

namespace {

Var x_var() {
  static const Var x = Var::intern("X");
  return x;
}

// Clears denominators: p as a polynomial over Q in the symbols and X.
Poly to_poly(const XPoly& p) {
  Poly lcm(1);
  for (const auto& c : p.coefficients()) {
    if (c.is_zero() || c.denominator().is_one()) continue;
    lcm = exact_divide(lcm * c.denominator(), gcd(lcm, c.denominator()));
  }
  Poly out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Scalar& c = p[i];
    if (c.is_zero()) continue;
    out += (c.numerator() * exact_divide(lcm, c.denominator())).times(Monomial(x_var(), static_cast<int>(i)));
  }
  return out;
}

// u -> -u on a polynomial reduced modulo u^2 = q.
Poly conjugate(const Poly& p) {
  const Var u = sqrt_q_var();
  Poly out;
  for (const auto& [m, c] : p.terms()) out += Poly(m.degree(u) % 2 ? Rational(-c) : c, m);
  return out;
}

XPoly from_poly(const Poly& p) {
  std::vector<Scalar> c;
  for (auto& [k, coeff] : p.coefficients_in(x_var())) {
    if (c.size() <= static_cast<std::size_t>(k)) c.resize(static_cast<std::size_t>(k) + 1);
    c[static_cast<std::size_t>(k)] = Scalar(coeff, Poly(1));
  }
  return XPoly(std::move(c));
}

}  // namespace

XPoly XPoly::gcd(XPoly a, XPoly b) {
  if (a.is_zero() && b.is_zero()) return XPoly();
  if (a.degree() == 0 || b.degree() == 0) {
    if (!a.is_zero() && !b.is_zero()) return one();
  }
  // Unless u is algebraic over Q the coefficient ring is a polynomial ring
  // over Q, where the multivariate gcd avoids the
  // expression swell of Euclid over its fraction field.
  if (!residue_field_size() || Scalar::sqrt_q().is_rational()) {
    const XPoly g = from_poly(g2gamma::gcd(to_poly(a), to_poly(b)));
    const Scalar& norm = g.c_.front().is_zero() ? g.c_.back() : g.c_.front();
    return g.scaled(norm.inverse());
  }
  // u is algebraic. Treating it as an indeterminate finds the common factors
  // that survive the relation u^2 = q. Any further common factor over Q(u)
  // divides the gcd over Q of the norms p(u) p(-u), which is cheap and
  // usually trivial; only then does Euclid over the field run.
  auto normalized = [](const XPoly& g) {
    const Scalar& lead = g.c_.front().is_zero() ? g.c_.back() : g.c_.front();
    return g.scaled(lead.inverse());
  };
  XPoly common = one();
  {
    const Poly h = g2gamma::gcd(to_poly(a), to_poly(b));
    if (h.degree(x_var()) > 0) {
      common = from_poly(h);
      a = a.exact_div(common);
      b = b.exact_div(common);
    }
  }
  const Rational q(*residue_field_size());
  auto norm = [&](const XPoly& p) {
    const Poly f = to_poly(p);
    return (f * conjugate(f)).reduce_square(sqrt_q_var(), q);
  };
  const Poly bound = g2gamma::gcd(norm(a), norm(b));
  if (bound.degree(x_var()) == 0) return normalized(common);
  // Monic remainders keep the coefficients in lowest terms small.
  auto euclid = [](XPoly x, XPoly y) {
    while (!y.is_zero()) {
      XPoly quotient, remainder;
      divmod(x, y, quotient, remainder);
      x = std::move(y);
      y = remainder.is_zero() ? remainder : remainder.scaled(remainder.c_.back().inverse());
    }
    return x;
  };
  // Pseudo-remainders over Q[u, symbols] keep the field arithmetic to
  // polynomials of degree below that of the bound.
  auto reduce = [&](const XPoly& p, const XPoly& m) {
    const Poly pm = to_poly(m);
    const Var x = x_var();
    const int dm = pm.degree(x);
    const Poly lm = pm.coefficients_in(x).rbegin()->second;
    Poly r = to_poly(p);
    while (!r.is_zero() && r.degree(x) >= dm) {
      const int dr = r.degree(x);
      const Poly lr = r.coefficients_in(x).rbegin()->second;
      r = (r * lm - lr.times(Monomial(x, dr - dm)) * pm).reduce_square(sqrt_q_var(), q);
    }
    return from_poly(r);
  };
  XPoly g = from_poly(bound);
  g = euclid(g, reduce(a, g));
  if (g.degree() > 0) g = euclid(g, reduce(b, g));
  if (g.degree() > 0) common = common * g;
  return normalized(common);
}

// --------------------------------------------------------- LaurentRational

namespace {

// prod (1 - c X)^k computed over a common denominator: with c = a / b each
// factor is (b - a X) / b, so the product needs one reduction per
// coefficient instead of one per intermediate sum.
XPoly expand(const XPoly& base, const std::map<Scalar, int>& linear, bool positive) {
  std::vector<Poly> p{Poly(1)};
  Poly d(1);
  bool any = false;
  for (const auto& [c, e] : linear) {
    const int k = positive ? e : -e;
    const Poly& a = c.numerator();
    const Poly& b = c.denominator();
    for (int i = 0; i < k; ++i) {
      std::vector<Poly> next(p.size() + 1);
      for (std::size_t j = 0; j < p.size(); ++j) {
        next[j] += p[j] * b;
        next[j + 1] -= p[j] * a;
      }
      p = std::move(next);
      d *= b;
      any = true;
    }
  }
  if (!any) return base;
  std::vector<Scalar> coefficients;
  coefficients.reserve(p.size());
  for (auto& pj : p) coefficients.emplace_back(std::move(pj), d);
  return base * XPoly(std::move(coefficients));
}

LaurentPoly to_laurent(const XPoly& p, const Scalar& scale, int shift) {
  LaurentPoly out;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    if (!p[i].is_zero()) out.emplace(static_cast<int>(i) + shift, p[i] * scale);
  }
  return out;
}

}  // namespace

LaurentRational LaurentRational::x_power(int k) {
  LaurentRational out;
  out.shift_ = k;
  return out;
}

LaurentRational LaurentRational::linear(const Scalar& c) {
  if (c.is_zero()) return LaurentRational(1);
  LaurentRational out;
  out.linear_.emplace(c, 1);
  return out;
}

LaurentRational LaurentRational::dual_linear(const Scalar& c) {
  // 1 - c X^{-1} = -c X^{-1} (1 - c^{-1} X)
  if (c.is_zero()) return LaurentRational(1);
  LaurentRational out(-c);
  out.shift_ = -1;
  out.linear_.emplace(c.inverse(), 1);
  return out;
}

LaurentRational LaurentRational::from_fraction(int shift, XPoly num, XPoly den) {
  if (den.is_zero()) throw MalformedInput("zero denominator in rational function of X");
  if (num.is_zero()) return LaurentRational(Scalar());
  auto strip = [](XPoly& p) {
    int k = 0;
    while (p[static_cast<std::size_t>(k)].is_zero()) ++k;
    if (k > 0) {
      std::vector<Scalar> c(p.coefficients().begin() + k, p.coefficients().end());
      p = XPoly(std::move(c));
    }
    return k;
  };
  shift += strip(num);
  shift -= strip(den);
  LaurentRational out(num[0] / den[0]);
  out.shift_ = shift;
  num = num.scaled(num[0].inverse());
  den = den.scaled(den[0].inverse());
  const XPoly g = XPoly::gcd(num, den);
  if (g.degree() > 0) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

LaurentRational LaurentRational::from_laurent(const LaurentPoly& num, const LaurentPoly& den) {
  auto dense = [](const LaurentPoly& p, int low) {
    std::vector<Scalar> c;
    for (const auto& [k, v] : p) {
      const auto idx = static_cast<std::size_t>(k - low);
      if (c.size() <= idx) c.resize(idx + 1);
      c[idx] += v;
    }
    return XPoly(std::move(c));
  };
  const int ln = num.empty() ? 0 : num.begin()->first;
  const int ld = den.empty() ? 0 : den.begin()->first;
  return from_fraction(ln - ld, dense(num, ln), dense(den, ld));
}

LaurentRational LaurentRational::from_normal_form(const NormalForm& nf) {
  return from_fraction(nf.shift, nf.num.scaled(nf.scale), nf.den);
}

bool LaurentRational::is_one() const { return scale_.is_one() && shift_ == 0 && linear_.empty() && is_factored(); }

void LaurentRational::settle() {
  if (scale_.is_zero()) {
    shift_ = 0;
    linear_.clear();
    num_ = den_ = XPoly::one();
    return;
  }
  std::erase_if(linear_, [](const auto& kv) { return kv.second == 0; });
  if (is_factored()) return;
  for (auto& [c, e] : linear_) {
    XPoly q;
    while (num_.divide_linear(c, q)) {
      num_ = std::move(q);
      ++e;
    }
    while (den_.divide_linear(c, q)) {
      den_ = std::move(q);
      --e;
    }
  }
  std::erase_if(linear_, [](const auto& kv) { return kv.second == 0; });
}

LaurentRational LaurentRational::operator-() const {
  LaurentRational out = *this;
  out.scale_ = -out.scale_;
  return out;
}

LaurentRational& LaurentRational::operator*=(const LaurentRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = LaurentRational(Scalar());
  scale_ *= o.scale_;
  shift_ += o.shift_;
  for (const auto& [c, e] : o.linear_) {
    auto [it, inserted] = linear_.try_emplace(c, e);
    if (!inserted) {
      it->second += e;
      if (it->second == 0) linear_.erase(it);
    }
  }
  if (is_factored() && o.is_factored()) return *this;
  const XPoly g1 = XPoly::gcd(num_, o.den_);
  const XPoly g2 = XPoly::gcd(o.num_, den_);
  num_ = num_.exact_div(g1) * o.num_.exact_div(g2);
  den_ = den_.exact_div(g2) * o.den_.exact_div(g1);
  settle();
  return *this;
}

LaurentRational LaurentRational::inverse() const {
  if (is_zero()) throw MalformedInput("division by the zero rational function");
  LaurentRational out;
  out.scale_ = scale_.inverse();
  out.shift_ = -shift_;
  for (const auto& [c, e] : linear_) out.linear_.emplace(c, -e);
  out.num_ = den_;
  out.den_ = num_;
  return out;
}

LaurentRational& LaurentRational::operator/=(const LaurentRational& o) { return *this *= o.inverse(); }

LaurentRational LaurentRational::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  LaurentRational out;
  for (int i = 0; i < e; ++i) out *= *this;
  return out;
}

NormalForm LaurentRational::normal_form() const {
  NormalForm nf;
  nf.scale = scale_;
  if (is_zero()) return nf;
  nf.shift = shift_;
  nf.num = expand(num_, linear_, true);
  nf.den = expand(den_, linear_, false);
  return nf;
}

int LaurentRational::numerator_degree() const {
  int d = num_.degree();
  for (const auto& [c, e] : linear_)
    if (e > 0) d += e;
  return d;
}

int LaurentRational::denominator_degree() const {
  int d = den_.degree();
  for (const auto& [c, e] : linear_)
    if (e < 0) d -= e;
  return d;
}

LaurentPoly LaurentRational::numerator_terms() const {
  if (is_zero()) return {};
  const NormalForm nf = normal_form();
  return to_laurent(nf.num, nf.scale, std::max(nf.shift, 0));
}

LaurentPoly LaurentRational::denominator_terms() const {
  if (is_zero()) return {{0, Scalar(1)}};
  const NormalForm nf = normal_form();
  return to_laurent(nf.den, Scalar(1), std::max(-nf.shift, 0));
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const NormalForm na = a.normal_form();
  const NormalForm nb = b.normal_form();
  const int k = std::min(na.shift, nb.shift);
  XPoly num = (na.num * nb.den).scaled(na.scale).shifted(na.shift - k) +
              (nb.num * na.den).scaled(nb.scale).shifted(nb.shift - k);
  return LaurentRational::from_fraction(k, std::move(num), na.den * nb.den);
}

LaurentRational operator-(const LaurentRational& a, const LaurentRational& b) { return a + (-b); }

bool operator==(const LaurentRational& a, const LaurentRational& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  if (a.is_factored() && b.is_factored())
    return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.linear_ == b.linear_;
  return a.normal_form() == b.normal_form();
}

bool LaurentRational::identical(const LaurentRational& o) const {
  return scale_ == o.scale_ && shift_ == o.shift_ && linear_ == o.linear_ && num_ == o.num_ && den_ == o.den_;
}

LaurentRational LaurentRational::expanded() const {
  if (is_zero()) return *this;
  NormalForm nf = normal_form();
  LaurentRational out(nf.scale);
  out.shift_ = nf.shift;
  out.num_ = std::move(nf.num);
  out.den_ = std::move(nf.den);
  return out;
}

LaurentRational normalize(const LaurentRational& f) { return f.expanded(); }

LaurentRational substitute_dual(const LaurentRational& f) {
  if (f.is_zero()) return f;
  const Scalar q = Scalar::q();
  const Scalar q_inv = q.inverse();
  LaurentRational out(f.scale() * q_inv.pow(f.shift()));
  out *= LaurentRational::x_power(-f.shift());
  for (const auto& [c, e] : f.linear_factors()) {
    // 1 - c q^{-1} X^{-1}
    out *= LaurentRational::dual_linear(c * q_inv).pow(e);
  }
  auto reflect = [&](const XPoly& p) {
    // p(q^{-1} X^{-1}) = X^{-n} r(X) with r_i = p_{n-i} q^{-(n-i)}
    const int n = p.degree();
    LaurentPoly r;
    for (int i = 0; i <= n; ++i) r.emplace(i - n, p[static_cast<std::size_t>(n - i)] * q_inv.pow(n - i));
    return r;
  };
  if (!f.is_factored()) {
    out *= LaurentRational::from_laurent(reflect(f.residual_numerator()), reflect(f.residual_denominator()));
  }
  return out;
}

// --------------------------------------------------------------- rendering

namespace {

bool is_negative_term(const Scalar& c) {
  return c.numerator().is_monomial() && c.numerator().leading_coefficient() < 0 &&
         (c.denominator().is_one() || c.denominator().is_monomial());
}

bool is_compound(const Scalar& c) { return !c.numerator().is_monomial() || !(c.denominator().is_one() || c.denominator().is_monomial()); }

template <class Coeff, class Power>
std::string render_laurent(const LaurentPoly& p, Coeff coeff, Power power, const char* open, const char* close,
                           const char* times) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p) {
    const bool negative = is_negative_term(c);
    const Scalar mag = negative ? -c : c;
    std::string term;
    if (k == 0) {
      term = coeff(mag);
    } else if (mag.is_one()) {
      term = power(k);
    } else {
      const std::string s = coeff(mag);
      term = (is_compound(mag) ? open + s + close : s) + times + power(k);
    }
    if (first)
      out += negative ? "-" + term : term;
    else
      out += negative ? " - " + term : " + " + term;
    first = false;
  }
  return out;
}

}  // namespace

std::string LaurentRational::to_string() const {
  auto coeff = [](const Scalar& c) { return c.to_string(); };
  auto power = [](int k) { return k == 1 ? std::string("X") : "X^" + std::to_string(k); };
  const std::string num = render_laurent(numerator_terms(), coeff, power, "(", ")", "*");
  const LaurentPoly den = denominator_terms();
  if (den.size() == 1 && den.begin()->first == 0 && den.begin()->second.is_one()) return num;
  return "(" + num + ")/(" + render_laurent(den, coeff, power, "(", ")", "*") + ")";
}

std::string LaurentRational::to_latex() const {
  auto coeff = [](const Scalar& c) { return c.to_latex(); };
  auto power = [](int k) { return k == 1 ? std::string("X") : "X^{" + std::to_string(k) + "}"; };
  const std::string num = render_laurent(numerator_terms(), coeff, power, "\\left(", "\\right)", " ");
  const LaurentPoly den = denominator_terms();
  if (den.size() == 1 && den.begin()->first == 0 && den.begin()->second.is_one()) return num;
  return "\\frac{" + num + "}{" + render_laurent(den, coeff, power, "\\left(", "\\right)", " ") + "}";
}

}  // namespace g2gamma
