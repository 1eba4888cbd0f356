#include "g2gamma/ratfun/poly.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <set>

#include "g2gamma/errors.hpp"

namespace g2gamma {

Var Var::intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return Var(&*it);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, int exponent) {
  if (exponent > 0) powers_.emplace_back(v, exponent);
}

int Monomial::degree(Var v) const {
  for (const auto& [w, e] : powers_)
    if (w == v) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.powers_.reserve(powers_.size() + other.powers_.size());
  auto i = powers_.begin();
  auto j = other.powers_.begin();
  while (i != powers_.end() || j != other.powers_.end()) {
    if (j == other.powers_.end() || (i != powers_.end() && i->first < j->first)) {
      out.powers_.push_back(*i++);
    } else if (i == powers_.end() || j->first < i->first) {
      out.powers_.push_back(*j++);
    } else {
      out.powers_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  auto j = other.powers_.begin();
  for (const auto& [v, e] : powers_) {
    while (j != other.powers_.end() && j->first < v) ++j;
    if (j == other.powers_.end() || j->first != v || j->second < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial out;
  auto j = other.powers_.begin();
  for (const auto& [v, e] : powers_) {
    int d = e;
    if (j != other.powers_.end() && j->first == v) d -= (j++)->second;
    if (d < 0) throw InternalConsistency("monomial division is not exact");
    if (d > 0) out.powers_.emplace_back(v, d);
  }
  if (j != other.powers_.end()) throw InternalConsistency("monomial division is not exact");
  return out;
}

Monomial Monomial::without(Var v) const {
  Monomial out;
  for (const auto& p : powers_)
    if (p.first != v) out.powers_.push_back(p);
  return out;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto j = b.powers_.begin();
  for (const auto& [v, e] : a.powers_) {
    while (j != b.powers_.end() && j->first < v) ++j;
    if (j != b.powers_.end() && j->first == v) out.powers_.emplace_back(v, std::min(e, j->second));
  }
  return out;
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b) {
  const auto& pa = a.powers();
  const auto& pb = b.powers();
  std::size_t i = 0;
  for (; i < pa.size() && i < pb.size(); ++i) {
    if (pa[i].first != pb[i].first)
      return pa[i].first < pb[i].first ? std::strong_ordering::greater : std::strong_ordering::less;
    if (pa[i].second != pb[i].second) return pa[i].second <=> pb[i].second;
  }
  if (i < pa.size()) return std::strong_ordering::greater;
  if (i < pb.size()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

// -------------------------------------------------------------------- Poly

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c) : Poly(c, Monomial()) {}

Poly::Poly(const Rational& c, Monomial m) {
  if (c == 0) return;
  Rational k = c;
  k.canonicalize();
  terms_.emplace(std::move(m), std::move(k));
}

Poly Poly::variable(Var v, int exponent) { return Poly(Rational(1), Monomial(v, exponent)); }

Poly Poly::from_terms(Terms terms) {
  std::erase_if(terms, [](const auto& t) { return t.second == 0; });
  Poly p;
  p.terms_ = std::move(terms);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Poly::is_one() const { return is_constant() && !terms_.empty() && terms_.begin()->second == 1; }

Rational Poly::constant() const {
  auto it = terms_.find(Monomial());
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Poly::contains(Var v) const {
  for (const auto& t : terms_)
    if (t.first.degree(v) > 0) return true;
  return false;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.degree(v));
  return d;
}

bool Poly::main_variable(Var& out) const {
  bool found = false;
  for (const auto& t : terms_) {
    const auto& p = t.first.powers();
    if (!p.empty() && (!found || p.front().first < out)) {
      out = p.front().first;
      found = true;
    }
  }
  return found;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly Poly::scaled(const Rational& c) const {
  if (c == 0) return Poly();
  Poly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Poly Poly::times(const Monomial& m) const {
  Poly out;
  for (const auto& [mt, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), mt * m, c);
  return out;
}

Poly Poly::pow(int e) const {
  Poly out(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::map<int, Poly> Poly::coefficients_in(Var v) const {
  std::map<int, Poly> out;
  for (const auto& [m, c] : terms_) out[m.degree(v)].add_term(m.without(v), c);
  return out;
}

Poly Poly::from_coefficients(Var v, const std::map<int, Poly>& coeffs) {
  Poly out;
  for (const auto& [k, p] : coeffs) {
    const Monomial vk(v, k);
    for (const auto& [m, c] : p.terms_) out.add_term(m * vk, c);
  }
  return out;
}

Poly Poly::reduce_square(Var v, const Rational& square) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const int e = m.degree(v);
    if (e < 2) {
      out.add_term(m, c);
      continue;
    }
    Rational factor = 1;
    for (int i = 0; i < e / 2; ++i) factor *= square;
    out.add_term(m.without(v) * Monomial(v, e % 2), c * factor);
  }
  return out;
}

std::strong_ordering compare(const Poly& a, const Poly& b) {
  auto i = a.terms().begin();
  auto j = b.terms().begin();
  for (; i != a.terms().end() && j != b.terms().end(); ++i, ++j) {
    if (auto c = lex_compare(i->first, j->first); c != 0) return c;
    if (i->second != j->second) return i->second < j->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (i != a.terms().end()) return std::strong_ordering::greater;
  if (j != b.terms().end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool try_divide(const Poly& a, const Poly& b, Poly& quotient) {
  if (b.is_zero()) throw MalformedInput("polynomial division by zero");
  quotient = Poly();
  if (b.is_constant()) {
    quotient = a.scaled(1 / b.constant());
    return true;
  }
  if (b.is_monomial()) {
    const Monomial& mb = b.leading_monomial();
    const Rational inv = 1 / b.leading_coefficient();
    for (const auto& [m, c] : a.terms()) {
      if (!mb.divides(m)) return false;
    }
    Poly q;
    for (const auto& [m, c] : a.terms()) q += Poly(c * inv, m / mb);
    quotient = std::move(q);
    return true;
  }
  Poly r = a;
  Poly q;
  const Monomial& mb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& mr = r.leading_monomial();
    if (!mb.divides(mr)) return false;
    const Poly t(r.leading_coefficient() / cb, mr / mb);
    q += t;
    r -= b * t;
  }
  quotient = std::move(q);
  return true;
}

Poly exact_divide(const Poly& a, const Poly& b) {
  Poly q;
  if (!try_divide(a, b, q)) throw InternalConsistency("polynomial division is not exact");
  return q;
}

Rational make_monic(Poly& p) {
  if (p.is_zero()) return 1;
  Rational lc = p.leading_coefficient();
  if (lc != 1) p = p.scaled(1 / lc);
  return lc;
}

namespace {

using Dense = std::vector<Poly>;  // coefficients in the main variable, low degree first

Dense to_dense(const Poly& p, Var v) {
  auto coeffs = p.coefficients_in(v);
  Dense out(coeffs.empty() ? 0 : coeffs.rbegin()->first + 1);
  for (auto& [k, c] : coeffs) out[k] = std::move(c);
  return out;
}

Poly from_dense(const Dense& d, Var v) {
  std::map<int, Poly> coeffs;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (!d[k].is_zero()) coeffs.emplace(static_cast<int>(k), d[k]);
  return Poly::from_coefficients(v, coeffs);
}

void trim(Dense& d) {
  while (!d.empty() && d.back().is_zero()) d.pop_back();
}

Poly dense_content(const Dense& d) {
  Poly g;
  for (const auto& c : d) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Dense primitive(Dense d) {
  Poly c = dense_content(d);
  for (auto& x : d) x = exact_divide(x, c);
  // Rescale by a unit of Q to integer coefficients with trivial content and a
  // positive leading coefficient, which keeps remainder coefficients small.
  mpz_class den = 1, num = 0;
  for (const auto& x : d)
    for (const auto& t : x.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  for (const auto& x : d)
    for (const auto& t : x.terms()) {
      const mpz_class n = t.second.get_num() * (den / t.second.get_den());
      mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
    }
  Rational unit(den, num);
  if (d.back().leading_coefficient() < 0) unit = -unit;
  for (auto& x : d) x = x.scaled(unit);
  return d;
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, for deg a >= deg b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const Poly& lb = b.back();
  const std::size_t db = b.size() - 1;
  int missing = static_cast<int>(a.size() - b.size()) + 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const Poly la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& x : a) x *= lb;
    for (std::size_t k = 0; k <= db; ++k) a[k + shift] -= la * b[k];
    trim(a);
    --missing;
  }
  if (missing > 0) {
    const Poly f = lb.pow(missing);
    for (auto& x : a) x *= f;
  }
  return a;
}

// Heuristic gcd of polynomials with integer coefficients: evaluate the main
// variable at a large integer, recurse, rebuild the candidate from its
// symmetric xi-adic digits and keep it if it divides both inputs. Returns
// false when every evaluation point failed.

mpz_class max_norm(const Poly& p) {
  mpz_class m = 0;
  for (const auto& t : p.terms()) {
    const mpz_class c = abs(t.second.get_num());
    if (c > m) m = c;
  }
  return m;
}

mpz_class integer_content(const Poly& p) {
  mpz_class g = 0;
  for (const auto& t : p.terms()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.second.get_num_mpz_t());
  return g;
}

Poly evaluate_at(const Poly& p, Var v, const mpz_class& xi) {
  Poly::Terms out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m.degree(v);
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), xi.get_mpz_t(), static_cast<unsigned long>(e));
    out[m.without(v)] += c * pw;
  }
  return Poly::from_terms(std::move(out));
}

// Coefficientwise symmetric residue modulo xi.
Poly symmetric_mod(const Poly& p, const mpz_class& xi) {
  Poly::Terms out;
  const mpz_class half = xi / 2;
  for (const auto& [m, c] : p.terms()) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), c.get_num_mpz_t(), xi.get_mpz_t());
    if (r > half) r -= xi;
    if (r != 0) out.emplace(m, Rational(r));
  }
  return Poly::from_terms(std::move(out));
}

Poly interpolate(Poly h, Var v, const mpz_class& xi) {
  Poly::Terms out;
  const Rational inv(mpz_class(1), xi);
  for (int k = 0; !h.is_zero(); ++k) {
    const Poly digit = symmetric_mod(h, xi);
    for (const auto& [m, c] : digit.terms()) out.emplace(m * Monomial(v, k), c);
    h = (h - digit).scaled(inv);
  }
  return Poly::from_terms(std::move(out));
}

// Integer-coefficient gcd with positive leading coefficient.
bool heuristic_gcd(const Poly& f, const Poly& g, Poly& out) {
  if (f.is_zero() || g.is_zero()) return false;
  Var vf, vg;
  const bool hf = f.main_variable(vf);
  const bool hg = g.main_variable(vg);
  if (!hf && !hg) {
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), f.constant().get_num_mpz_t(), g.constant().get_num_mpz_t());
    out = Poly(Rational(c));
    return true;
  }
  const Var v = !hf ? vg : !hg ? vf : (vf < vg ? vf : vg);
  const mpz_class cf = integer_content(f);
  const mpz_class cg = integer_content(g);
  mpz_class common;
  mpz_gcd(common.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const Poly ff = f.scaled(Rational(mpz_class(1), cf));
  const Poly gg = g.scaled(Rational(mpz_class(1), cg));

  const mpz_class nf = max_norm(ff), ng = max_norm(gg);
  const mpz_class bound = 2 * (nf < ng ? nf : ng) + 29;
  // At or above this bound a candidate dividing both inputs is the gcd.
  mpz_class xi = bound;
  {
    const mpz_class lf = abs(ff.leading_coefficient().get_num());
    const mpz_class lg = abs(gg.leading_coefficient().get_num());
    const mpz_class alt = 2 * std::min(mpz_class(nf / lf), mpz_class(ng / lg)) + 2;
    if (alt > xi) xi = alt;
  }
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Poly fe = evaluate_at(ff, v, xi);
    const Poly ge = evaluate_at(gg, v, xi);
    Poly he;
    if (!fe.is_zero() && !ge.is_zero() && heuristic_gcd(fe, ge, he)) {
      Poly h = interpolate(he, v, xi);
      const mpz_class ch = integer_content(h);
      if (ch != 0) {
        h = h.scaled(Rational(mpz_class(1), ch));
        if (h.leading_coefficient() < 0) h = -h;
        Poly quotient;
        if (try_divide(ff, h, quotient) && try_divide(gg, h, quotient)) {
          out = h.scaled(Rational(common));
          return true;
        }
      }
    }
    xi = xi * 73794 * sqrt(sqrt(xi)) / 27011;
  }
  return false;
}

using QDense = std::vector<Rational>;

// Degree in v of gcd(a(v, r), b(v, r)) over Q, with the other variables set to
// points r where neither leading coefficient vanishes; -1 if no such point was
// found. This bounds the v-degree of gcd(a, b) from above.
int specialized_gcd_degree(const Poly& a, const Poly& b, Var v) {
  std::mt19937 rng(0x9e3779b9u);
  std::uniform_int_distribution<int> pick(2, 1000003);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::map<Var, Rational> point;
    auto eval = [&](const Poly& p) {
      QDense out;
      for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        int k = 0;
        for (const auto& [x, e] : m.powers()) {
          if (x == v) {
            k = e;
            continue;
          }
          auto it = point.find(x);
          if (it == point.end()) it = point.emplace(x, Rational(pick(rng))).first;
          Rational pw;
          mpz_pow_ui(pw.get_num_mpz_t(), it->second.get_num_mpz_t(), static_cast<unsigned long>(e));
          t *= pw;
        }
        if (out.size() <= static_cast<std::size_t>(k)) out.resize(static_cast<std::size_t>(k) + 1);
        out[static_cast<std::size_t>(k)] += t;
      }
      return out;
    };
    QDense pa = eval(a), pb = eval(b);
    if (static_cast<int>(pa.size()) - 1 != a.degree(v) || pa.back() == 0) continue;
    if (static_cast<int>(pb.size()) - 1 != b.degree(v) || pb.back() == 0) continue;
    if (pa.size() < pb.size()) std::swap(pa, pb);
    while (!pb.empty()) {
      while (pa.size() >= pb.size()) {
        const Rational f = pa.back() / pb.back();
        const std::size_t shift = pa.size() - pb.size();
        for (std::size_t k = 0; k < pb.size(); ++k) pa[k + shift] -= f * pb[k];
        while (!pa.empty() && pa.back() == 0) pa.pop_back();
        if (pa.empty()) break;
      }
      std::swap(pa, pb);
    }
    return static_cast<int>(pa.size()) - 1;
  }
  return -1;
}

Poly content_in(const Poly& p, Var v) {
  Poly g;
  for (const auto& [k, c] : p.coefficients_in(v)) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) {
    Poly g = b;
    make_monic(g);
    return g;
  }
  if (b.is_zero()) {
    Poly g = a;
    make_monic(g);
    return g;
  }
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a.is_monomial() || b.is_monomial()) {
    const Poly& mono = a.is_monomial() ? a : b;
    const Poly& other = a.is_monomial() ? b : a;
    Monomial g = mono.leading_monomial();
    for (const auto& t : other.terms()) {
      g = Monomial::gcd(g, t.first);
      if (g.is_one()) break;
    }
    return Poly(Rational(1), g);
  }
  if (a == b) {
    Poly g = a;
    make_monic(g);
    return g;
  }

  {
    // Clear denominators and try the heuristic first.
    auto integral = [](const Poly& p) {
      mpz_class den = 1;
      for (const auto& t : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
      return p.scaled(Rational(den));
    };
    Poly h;
    if (heuristic_gcd(integral(a), integral(b), h)) {
      make_monic(h);
      return h;
    }
  }

  Var va, vb;
  a.main_variable(va);
  b.main_variable(vb);
  const Var v = va < vb ? va : vb;
  if (!a.contains(v)) return gcd(a, content_in(b, v));
  if (!b.contains(v)) return gcd(content_in(a, v), b);

  const Poly ca = content_in(a, v);
  const Poly cb = content_in(b, v);
  const Poly g = gcd(ca, cb);
  const Poly a1 = exact_divide(a, ca);
  const Poly b1 = exact_divide(b, cb);
  if (specialized_gcd_degree(a1, b1, v) == 0) return g;

  // Subresultant remainder sequence.
  Dense pa = to_dense(a1, v);
  Dense pb = to_dense(b1, v);
  if (pa.size() < pb.size()) std::swap(pa, pb);
  Poly sg(1), sh(1);
  for (;;) {
    const int delta = static_cast<int>(pa.size() - pb.size());
    Dense r = pseudo_remainder(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) return g;
    pa = std::move(pb);
    const Poly divisor = sg * sh.pow(delta);
    for (auto& x : r) x = exact_divide(x, divisor);
    pb = std::move(r);
    sg = pa.back();
    if (delta > 0) sh = exact_divide(sg.pow(delta), sh.pow(delta - 1));
  }
  Poly out = g * from_dense(primitive(std::move(pb)), v);
  make_monic(out);
  return out;
}

}  // namespace g2gamma
