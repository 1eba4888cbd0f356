#ifndef G2GAMMA_WDREP_PARAM_HPP
#define G2GAMMA_WDREP_PARAM_HPP

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "g2gamma/localchar/character.hpp"

namespace g2gamma {

struct SupercuspidalAtom;
using AtomPtr = std::shared_ptr<const SupercuspidalAtom>;

// Position of a GL2 atom in the dihedral trichotomy, which fixes the shape
// of the cuspidal support of its adjoint lift.
enum class DihedralType { none, non_dihedral, dihedral_1, dihedral_3 };

std::string to_string(DihedralType t);
DihedralType dihedral_type_from_string(const std::string& s);

// chi (x) sigma_1 (x) ... (x) sigma_k (x) Sp(n). With no atoms this is the
// usual chi (x) Sp(n); with one atom a twisted supercuspidal; with two or more
// a formal tensor product that is never expanded.
struct Indecomposable {
  MultChar character;
  std::vector<AtomPtr> atoms;  // sorted by label
  int sp = 1;

  Indecomposable() = default;
  Indecomposable(MultChar chi, std::vector<AtomPtr> atoms, int sp);

  int dim() const;
  bool is_character() const { return atoms.empty(); }
  bool is_unramified() const { return atoms.empty() && character.is_unramified(); }
  Indecomposable dual() const;

  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Indecomposable& a, const Indecomposable& b);
  friend std::strong_ordering operator<=>(const Indecomposable& a, const Indecomposable& b);
};

// Formal direct sum; summands kept sorted, so equality is multiset equality.
class WDParam {
 public:
  WDParam() = default;
  explicit WDParam(std::vector<Indecomposable> summands);

  static WDParam character(const MultChar& chi, int sp = 1);
  static WDParam atom(const AtomPtr& sigma, const MultChar& chi = MultChar());

  const std::vector<Indecomposable>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  int dim() const;
  WDParam dual() const;

  WDParam& operator+=(const WDParam& o);
  friend WDParam operator+(WDParam a, const WDParam& b) { return a += b; }
  friend bool operator==(const WDParam&, const WDParam&) = default;

  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::vector<Indecomposable> summands_;
};

// Opaque irreducible representation of a Weil group (equivalently a
// supercuspidal of GL_dim). Identified by its label.
struct SupercuspidalAtom {
  std::string label;
  std::string dual_label;
  int dim = 2;
  MultChar central_character;
  DihedralType dihedral = DihedralType::none;
  // Cuspidal support of Ad(tau) as a 3-dimensional parameter (dim 2 only).
  std::optional<WDParam> ad_support;

  bool self_dual() const { return label == dual_label; }
  // Checks dimension, dihedral data and the shape of ad_support.
  void validate() const;
};

// Validates and wraps.
AtomPtr make_atom(SupercuspidalAtom atom);
// tau^vee: labels swapped, central character inverted, same adjoint support.
AtomPtr dual(const AtomPtr& sigma);

}  // namespace g2gamma

#endif  // G2GAMMA_WDREP_PARAM_HPP
