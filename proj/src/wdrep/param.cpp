#include "g2gamma/wdrep/param.hpp"

#include <algorithm>

#include "g2gamma/errors.hpp"
#include "g2gamma/wdrep/ops.hpp"

namespace g2gamma {

std::string to_string(DihedralType t) {
  switch (t) {
    case DihedralType::none: return "none";
    case DihedralType::non_dihedral: return "non_dihedral";
    case DihedralType::dihedral_1: return "dihedral_1";
    case DihedralType::dihedral_3: return "dihedral_3";
  }
  return "none";
}

DihedralType dihedral_type_from_string(const std::string& s) {
  if (s == "none") return DihedralType::none;
  if (s == "non_dihedral") return DihedralType::non_dihedral;
  if (s == "dihedral_1") return DihedralType::dihedral_1;
  if (s == "dihedral_3") return DihedralType::dihedral_3;
  throw MalformedInput("unknown dihedral type \"" + s + "\" (expected none, non_dihedral, dihedral_1 or dihedral_3)");
}

// ---------------------------------------------------------------- atoms

void SupercuspidalAtom::validate() const {
  if (label.empty() || dual_label.empty()) throw MalformedInput("atom needs a label and a dual_label");
  if (dim < 1) throw MalformedInput("atom " + label + ": dim must be positive");
  if (self_dual() && central_character != central_character.inverse())
    throw MalformedInput("atom " + label + ": a self-dual atom needs a central character of order at most 2");
  if (dim != 2 && dihedral != DihedralType::none)
    throw MalformedInput("atom " + label + ": dihedral type is only meaningful for dim 2");
  if (!ad_support) return;
  if (dim != 2) throw MalformedInput("atom " + label + ": ad_support is only meaningful for dim 2");
  const WDParam& ad = *ad_support;
  if (ad.dim() != 3) throw MalformedInput("atom " + label + ": ad_support must be 3-dimensional");
  std::vector<int> atom_dims;
  int characters = 0;
  for (const auto& s : ad.summands()) {
    if (s.sp != 1) throw MalformedInput("atom " + label + ": ad_support is a cuspidal support, Sp(n>1) not allowed");
    if (s.atoms.size() > 1) throw MalformedInput("atom " + label + ": ad_support entries must be cuspidal");
    if (s.atoms.empty())
      ++characters;
    else
      atom_dims.push_back(s.atoms.front()->dim);
  }
  const auto expect = [&](bool ok, const char* shape) {
    if (!ok) throw MalformedInput("atom " + label + ": ad_support of a " + to_string(dihedral) + " atom must be " + shape);
  };
  switch (dihedral) {
    case DihedralType::none:
      throw MalformedInput("atom " + label + ": ad_support given but dihedral type is none");
    case DihedralType::non_dihedral:
      expect(characters == 0 && atom_dims == std::vector<int>{3}, "a single 3-dimensional atom");
      break;
    case DihedralType::dihedral_1:
      expect(characters == 1 && atom_dims == std::vector<int>{2}, "a 2-dimensional atom plus a character");
      break;
    case DihedralType::dihedral_3:
      expect(characters == 3, "three characters");
      break;
  }
  if (!determinant(ad).is_trivial())
    throw MalformedInput("atom " + label + ": ad_support must have trivial determinant, got " + determinant(ad).to_string());
}

AtomPtr make_atom(SupercuspidalAtom atom) {
  atom.validate();
  return std::make_shared<const SupercuspidalAtom>(std::move(atom));
}

AtomPtr dual(const AtomPtr& sigma) {
  if (sigma->self_dual()) return sigma;
  SupercuspidalAtom d = *sigma;
  std::swap(d.label, d.dual_label);
  d.central_character = sigma->central_character.inverse();
  return std::make_shared<const SupercuspidalAtom>(std::move(d));
}

// ------------------------------------------------------- indecomposables

namespace {

bool label_less(const AtomPtr& a, const AtomPtr& b) { return a->label < b->label; }

}  // namespace

Indecomposable::Indecomposable(MultChar chi, std::vector<AtomPtr> a, int n)
    : character(std::move(chi)), atoms(std::move(a)), sp(n) {
  if (sp < 1) throw MalformedInput("Sp(n) needs n >= 1, got " + std::to_string(sp));
  std::sort(atoms.begin(), atoms.end(), label_less);
}

int Indecomposable::dim() const {
  int d = sp;
  for (const auto& a : atoms) d *= a->dim;
  return d;
}

Indecomposable Indecomposable::dual() const {
  std::vector<AtomPtr> d;
  d.reserve(atoms.size());
  for (const auto& a : atoms) d.push_back(g2gamma::dual(a));
  return Indecomposable(character.inverse(), std::move(d), sp);
}

bool operator==(const Indecomposable& a, const Indecomposable& b) {
  if (a.sp != b.sp || a.atoms.size() != b.atoms.size() || a.character != b.character) return false;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    if (a.atoms[i]->label != b.atoms[i]->label) return false;
  return true;
}

std::strong_ordering operator<=>(const Indecomposable& a, const Indecomposable& b) {
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.sp <=> b.sp; c != 0) return c;
  if (auto c = a.atoms.size() <=> b.atoms.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    if (auto c = a.atoms[i]->label <=> b.atoms[i]->label; c != 0) return c;
  return a.character <=> b.character;
}

std::string Indecomposable::to_string() const {
  std::string out;
  for (const auto& a : atoms) out += (out.empty() ? "" : " x ") + a->label;
  if (atoms.empty() || !character.is_trivial()) out += (out.empty() ? "" : " x ") + character.to_string();
  if (sp > 1) out += " x Sp(" + std::to_string(sp) + ")";
  return out;
}

std::string Indecomposable::to_latex() const {
  std::string out;
  for (const auto& a : atoms) out += (out.empty() ? "" : " \\otimes ") + std::string("\\sigma_{\\mathrm{") + a->label + "}}";
  if (atoms.empty() || !character.is_trivial()) out += (out.empty() ? "" : " \\otimes ") + character.to_latex();
  if (sp > 1) out += " \\otimes \\mathrm{Sp}(" + std::to_string(sp) + ")";
  return out;
}

// ------------------------------------------------------------- WDParam

WDParam::WDParam(std::vector<Indecomposable> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end());
}

WDParam WDParam::character(const MultChar& chi, int sp) { return WDParam({Indecomposable(chi, {}, sp)}); }

WDParam WDParam::atom(const AtomPtr& sigma, const MultChar& chi) { return WDParam({Indecomposable(chi, {sigma}, 1)}); }

int WDParam::dim() const {
  int d = 0;
  for (const auto& s : summands_) d += s.dim();
  return d;
}

WDParam WDParam::dual() const {
  std::vector<Indecomposable> d;
  d.reserve(summands_.size());
  for (const auto& s : summands_) d.push_back(s.dual());
  return WDParam(std::move(d));
}

WDParam& WDParam::operator+=(const WDParam& o) {
  std::vector<Indecomposable> merged;
  merged.reserve(summands_.size() + o.summands_.size());
  std::merge(summands_.begin(), summands_.end(), o.summands_.begin(), o.summands_.end(), std::back_inserter(merged));
  summands_ = std::move(merged);
  return *this;
}

std::string WDParam::to_string() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& s : summands_) out += (out.empty() ? "" : " + ") + ("[" + s.to_string() + "]");
  return out;
}

std::string WDParam::to_latex() const {
  if (summands_.empty()) return "0";
  std::string out;
  for (const auto& s : summands_) out += (out.empty() ? "" : " \\oplus ") + ("(" + s.to_latex() + ")");
  return out;
}

}  // namespace g2gamma
