#ifndef G2GAMMA_G2LIFT_SUPPORT_HPP
#define G2GAMMA_G2LIFT_SUPPORT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "g2gamma/wdrep/param.hpp"

namespace g2gamma {

// [T, chi] with chi = (chi1, chi2, chi3), chi1 chi2 chi3 = 1.
struct TorusSupport {
  MultChar chi1, chi2, chi3;
};

// [M, tau], M = GL2 the Levi of the Heisenberg parabolic.
struct HeisenbergSupport {
  AtomPtr tau;
};

// [L, tau], L = GL2 the Levi of the other maximal parabolic. Case (c) needs
// tau->ad_support.
struct NonHeisenbergSupport {
  AtomPtr tau;
};

// A supercuspidal pi, opaque. Its lift is computable only when pi is known
// to be the theta lift of a 3-dimensional sigma, given as boxplus_source.
struct SupercuspidalSupport {
  std::string label;
  std::optional<WDParam> boxplus_source;
};

class G2Support {
 public:
  using Data = std::variant<TorusSupport, HeisenbergSupport, NonHeisenbergSupport, SupercuspidalSupport>;

  // chi3 := (chi1 chi2)^{-1}.
  static G2Support torus(const MultChar& chi1, const MultChar& chi2);
  // Throws MalformedInput unless chi1 chi2 chi3 = 1.
  static G2Support torus(const MultChar& chi1, const MultChar& chi2, const MultChar& chi3);
  static G2Support heisenberg(const AtomPtr& tau);
  static G2Support non_heisenberg(const AtomPtr& tau);
  static G2Support supercuspidal(const std::string& label, std::optional<WDParam> boxplus_source = std::nullopt);

  const Data& data() const { return data_; }
  // torus, heisenberg, non_heisenberg or supercuspidal.
  std::string family() const;
  std::string to_string() const;

 private:
  explicit G2Support(Data d) : data_(std::move(d)) {}
  Data data_;
};

// Cuspidal support of a representation of GL7: block sizes and one
// cuspidal datum per block.
struct GL7Support {
  std::vector<int> levi;
  std::vector<Indecomposable> reps;

  WDParam flatten() const;
  std::string to_string() const;
};

// std o phi_pi. UnsupportedConfiguration for a supercuspidal without
// boxplus_source, IncompleteInput for a non-Heisenberg tau without
// ad_support.
WDParam std_parameter(const G2Support& s);

// The support map f on non-supercuspidal supports.
GL7Support map_f(const G2Support& s);

// Lambda^2(std) minus std, 14-dimensional.
WDParam ad_parameter(const G2Support& s);

// sigma + 1 + sigma^vee for 3-dimensional sigma.
WDParam boxplus(const WDParam& sigma);

}  // namespace g2gamma

#endif  // G2GAMMA_G2LIFT_SUPPORT_HPP
