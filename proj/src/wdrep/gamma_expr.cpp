#include "g2gamma/wdrep/gamma_expr.hpp"

#include <algorithm>

namespace g2gamma {

namespace {

std::string ramified_string(const std::map<std::string, int>& r) {
  std::string out;
  for (const auto& [label, k] : r) {
    if (!out.empty()) out += "*";
    out += label;
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string ramified_latex(const std::map<std::string, int>& r) {
  std::string out;
  for (const auto& [label, k] : r) {
    if (!out.empty()) out += " ";
    out += "\\chi_{\\mathrm{" + label + "}}";
    if (k != 1) out += "^{" + std::to_string(k) + "}";
  }
  return out;
}

}  // namespace

GammaAtom::GammaAtom(std::vector<AtomPtr> c, std::map<std::string, int> r, Scalar t)
    : constituents(std::move(c)), ramified(std::move(r)), twist(std::move(t)) {
  std::sort(constituents.begin(), constituents.end(),
            [](const AtomPtr& a, const AtomPtr& b) { return a->label < b->label; });
  std::erase_if(ramified, [](const auto& kv) { return kv.second == 0; });
}

std::string GammaAtom::left() const {
  if (!constituents.empty()) return constituents.front()->label;
  return ramified.empty() ? "1" : ramified_string(ramified);
}

std::string GammaAtom::right() const {
  if (constituents.empty()) return "1";
  std::string out;
  for (std::size_t i = 1; i < constituents.size(); ++i) out += (out.empty() ? "" : " x ") + constituents[i]->label;
  if (!ramified.empty()) out += (out.empty() ? "" : " x ") + ramified_string(ramified);
  return out.empty() ? "1" : out;
}

GammaAtom GammaAtom::dual() const {
  std::vector<AtomPtr> d;
  d.reserve(constituents.size());
  for (const auto& a : constituents) d.push_back(g2gamma::dual(a));
  std::map<std::string, int> r;
  for (const auto& [label, k] : ramified) r[label] = -k;
  return GammaAtom(std::move(d), std::move(r), twist.inverse());
}

std::string GammaAtom::to_string() const {
  std::string out = "gamma(" + left();
  if (const std::string r = right(); r != "1") out += " x " + r;
  return out + "; " + twist.to_string() + ")";
}

std::string GammaAtom::to_latex() const {
  std::string out;
  for (const auto& a : constituents) out += (out.empty() ? "" : " \\times ") + std::string("\\sigma_{\\mathrm{") + a->label + "}}";
  if (!ramified.empty()) out += (out.empty() ? "" : " \\times ") + ramified_latex(ramified);
  if (!twist.is_one()) out += (out.empty() ? "" : " \\times ") + std::string("\\nu_{") + twist.to_latex() + "}";
  if (out.empty()) out = "1";
  return "\\gamma(s, " + out + ", \\psi)";
}

bool operator==(const GammaAtom& a, const GammaAtom& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const GammaAtom& a, const GammaAtom& b) {
  if (auto c = a.constituents.size() <=> b.constituents.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.constituents.size(); ++i)
    if (auto c = a.constituents[i]->label <=> b.constituents[i]->label; c != 0) return c;
  if (a.ramified != b.ramified) return a.ramified < b.ramified ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.twist <=> b.twist;
}

// ------------------------------------------------------------- GammaExpr

GammaExpr GammaExpr::atom(const GammaAtom& a, int exponent) {
  GammaExpr g;
  if (exponent != 0) g.atoms_[a] = exponent;
  return g;
}

int GammaExpr::atom_count() const {
  int n = 0;
  for (const auto& [a, e] : atoms_) n += e < 0 ? -e : e;
  return n;
}

GammaExpr& GammaExpr::operator*=(const GammaExpr& o) {
  rational_ *= o.rational_;
  for (const auto& [a, e] : o.atoms_)
    if ((atoms_[a] += e) == 0) atoms_.erase(a);
  return *this;
}

GammaExpr& GammaExpr::operator/=(const GammaExpr& o) {
  rational_ /= o.rational_;
  for (const auto& [a, e] : o.atoms_)
    if ((atoms_[a] -= e) == 0) atoms_.erase(a);
  return *this;
}

GammaExpr GammaExpr::inverse() const { return pow(-1); }

GammaExpr GammaExpr::pow(int e) const {
  GammaExpr g(rational_.pow(e));
  if (e == 0) return g;
  for (const auto& [a, k] : atoms_) g.atoms_[a] = k * e;
  return g;
}

std::string GammaExpr::to_string() const {
  std::string out = rational_.to_string();
  for (const auto& [a, e] : atoms_) {
    out += " * " + a.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string GammaExpr::to_latex() const {
  std::string out = rational_.to_latex();
  for (const auto& [a, e] : atoms_) {
    out += " \\cdot " + a.to_latex();
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

GammaExpr substitute_dual(const GammaExpr& g) {
  GammaExpr out(substitute_dual(g.rational()));
  for (const auto& [a, e] : g.atoms()) out *= GammaExpr::atom(a.dual(), -e);
  return out;
}

}  // namespace g2gamma
