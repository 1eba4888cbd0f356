#include "g2gamma/localchar/character.hpp"

#include "g2gamma/errors.hpp"

namespace g2gamma {

namespace {

std::string factor(const std::string& s) {
  return s.find_first_of(" /") == std::string::npos ? s : "(" + s + ")";
}

}  // namespace

void require_unramified(const AdditiveCharacter& psi) {
  if (psi.conductor_exponent != 0)
    throw UnsupportedConfiguration("additive character of conductor exponent " +
                                   std::to_string(psi.conductor_exponent) + " (only 0 is supported)");
}

MultChar::MultChar(std::map<std::string, int> ramified, Scalar alpha, Rational twist)
    : ramified_(std::move(ramified)), alpha_(std::move(alpha)), twist_(std::move(twist)) {
  std::erase_if(ramified_, [](const auto& kv) { return kv.second == 0; });
  twist_.canonicalize();
  if (alpha_.is_zero()) throw MalformedInput("character value must be nonzero");
  value_ = alpha_ * Scalar::q_power(-twist_);
}

MultChar MultChar::unramified(const Scalar& alpha, const Rational& twist) { return MultChar({}, alpha, twist); }

MultChar MultChar::ramified(const std::string& label, const Rational& twist) {
  if (label.empty()) throw MalformedInput("ramified character needs a label");
  return MultChar({{label, 1}}, Scalar(1), twist);
}

MultChar MultChar::inverse() const { return pow(-1); }

MultChar MultChar::pow(int e) const {
  std::map<std::string, int> r;
  for (const auto& [label, k] : ramified_) r[label] = k * e;
  return MultChar(std::move(r), alpha_.pow(e), twist_ * e);
}

MultChar MultChar::twisted(const Rational& t) const { return MultChar(ramified_, alpha_, twist_ + t); }

MultChar operator*(const MultChar& a, const MultChar& b) {
  std::map<std::string, int> r = a.ramified_;
  for (const auto& [label, k] : b.ramified_) r[label] += k;
  return MultChar(std::move(r), a.alpha_ * b.alpha_, a.twist_ + b.twist_);
}

std::strong_ordering operator<=>(const MultChar& a, const MultChar& b) {
  if (a.ramified_ != b.ramified_) return a.ramified_ < b.ramified_ ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.value_ <=> b.value_;
}

std::string MultChar::to_string() const {
  std::string out;
  for (const auto& [label, k] : ramified_) {
    if (!out.empty()) out += "*";
    out += label;
    if (k != 1) out += "^" + std::to_string(k);
  }
  if (!alpha_.is_one() || out.empty()) {
    if (!out.empty()) out += "*";
    out += factor(alpha_.to_string());
  }
  if (twist_ != 0) out += "*|.|^" + twist_.get_str();
  return out;
}

std::string MultChar::to_latex() const {
  std::string out;
  for (const auto& [label, k] : ramified_) {
    if (!out.empty()) out += " ";
    out += "\\chi_{\\mathrm{" + label + "}}";
    if (k != 1) out += "^{" + std::to_string(k) + "}";
  }
  if (!alpha_.is_one() || out.empty()) {
    if (!out.empty()) out += " ";
    out += "\\nu_{" + alpha_.to_latex() + "}";
  }
  if (twist_ != 0) {
    const std::string t = twist_.get_den() == 1 ? twist_.get_str()
                                                : "\\frac{" + twist_.get_num().get_str() + "}{" +
                                                      twist_.get_den().get_str() + "}";
    out += " |\\cdot|^{" + t + "}";
  }
  return out;
}

LaurentRational tate_L(const MultChar& chi) {
  if (!chi.is_unramified()) return LaurentRational(1);
  return LaurentRational::linear(chi.value()).inverse();
}

}  // namespace g2gamma
