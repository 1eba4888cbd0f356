#include "g2gamma/g2lift/support.hpp"

#include <algorithm>

#include "g2gamma/errors.hpp"
#include "g2gamma/wdrep/ops.hpp"

namespace g2gamma {

namespace {

template <class... F>
struct overloaded : F... {
  using F::operator()...;
};

void require_gl2(const AtomPtr& tau, const char* family) {
  if (!tau) throw MalformedInput(std::string(family) + " support needs an atom tau");
  if (tau->dim != 2)
    throw MalformedInput(std::string(family) + " support needs a 2-dimensional tau, " + tau->label + " has dim " +
                         std::to_string(tau->dim));
}

const WDParam& ad_support_of(const AtomPtr& tau) {
  if (!tau->ad_support)
    throw IncompleteInput("non_heisenberg support: atom " + tau->label +
                          " needs \"ad_support\" (the cuspidal support of Ad(tau))");
  return *tau->ad_support;
}

Indecomposable cuspidal(const MultChar& chi) { return Indecomposable(chi, {}, 1); }
Indecomposable cuspidal(const AtomPtr& tau) { return Indecomposable(MultChar(), {tau}, 1); }

}  // namespace

G2Support G2Support::torus(const MultChar& chi1, const MultChar& chi2) {
  return G2Support(TorusSupport{chi1, chi2, (chi1 * chi2).inverse()});
}

G2Support G2Support::torus(const MultChar& chi1, const MultChar& chi2, const MultChar& chi3) {
  const MultChar product = chi1 * chi2 * chi3;
  if (!product.is_trivial())
    throw MalformedInput("torus support needs chi1 chi2 chi3 = 1, got " + product.to_string());
  return G2Support(TorusSupport{chi1, chi2, chi3});
}

G2Support G2Support::heisenberg(const AtomPtr& tau) {
  require_gl2(tau, "heisenberg");
  return G2Support(HeisenbergSupport{tau});
}

G2Support G2Support::non_heisenberg(const AtomPtr& tau) {
  require_gl2(tau, "non_heisenberg");
  return G2Support(NonHeisenbergSupport{tau});
}

G2Support G2Support::supercuspidal(const std::string& label, std::optional<WDParam> boxplus_source) {
  if (label.empty()) throw MalformedInput("supercuspidal support needs a label");
  if (boxplus_source && boxplus_source->dim() != 3)
    throw MalformedInput("supercuspidal " + label + ": boxplus_source must be 3-dimensional, got dim " +
                         std::to_string(boxplus_source->dim()));
  return G2Support(SupercuspidalSupport{label, std::move(boxplus_source)});
}

std::string G2Support::family() const {
  return std::visit(overloaded{[](const TorusSupport&) { return "torus"; },
                               [](const HeisenbergSupport&) { return "heisenberg"; },
                               [](const NonHeisenbergSupport&) { return "non_heisenberg"; },
                               [](const SupercuspidalSupport&) { return "supercuspidal"; }},
                    data_);
}

std::string G2Support::to_string() const {
  return std::visit(
      overloaded{
          [](const TorusSupport& t) {
            return "torus(" + t.chi1.to_string() + ", " + t.chi2.to_string() + ", " + t.chi3.to_string() + ")";
          },
          [](const HeisenbergSupport& h) { return "heisenberg(" + h.tau->label + ")"; },
          [](const NonHeisenbergSupport& n) {
            return "non_heisenberg(" + n.tau->label + ", " + g2gamma::to_string(n.tau->dihedral) + ")";
          },
          [](const SupercuspidalSupport& s) {
            return "supercuspidal(" + s.label + (s.boxplus_source ? ", " + s.boxplus_source->to_string() : "") + ")";
          }},
      data_);
}

WDParam GL7Support::flatten() const { return WDParam(reps); }

std::string GL7Support::to_string() const {
  std::string out = "GL(";
  for (std::size_t i = 0; i < levi.size(); ++i) out += (i ? "," : "") + std::to_string(levi[i]);
  out += ") : ";
  for (std::size_t i = 0; i < reps.size(); ++i) out += (i ? " (x) " : "") + reps[i].to_string();
  return out;
}

WDParam boxplus(const WDParam& sigma) {
  if (sigma.dim() != 3) throw MalformedInput("boxplus needs a 3-dimensional parameter, got dim " + std::to_string(sigma.dim()));
  return sigma + WDParam::character(MultChar()) + sigma.dual();
}

WDParam std_parameter(const G2Support& s) {
  return std::visit(
      overloaded{[](const SupercuspidalSupport& sc) {
                   if (!sc.boxplus_source)
                     throw UnsupportedConfiguration("supercuspidal " + sc.label +
                                                    " has no parameter-level lift without \"boxplus_source\"");
                   return boxplus(*sc.boxplus_source);
                 },
                 [&](const auto&) { return map_f(s).flatten(); }},
      s.data());
}

GL7Support map_f(const G2Support& s) {
  return std::visit(
      overloaded{
          [](const TorusSupport& t) {
            return GL7Support{{1, 1, 1, 1, 1, 1, 1},
                              {cuspidal(t.chi1), cuspidal(t.chi2), cuspidal(t.chi3), cuspidal(MultChar()),
                               cuspidal(t.chi3.inverse()), cuspidal(t.chi2.inverse()), cuspidal(t.chi1.inverse())}};
          },
          [](const HeisenbergSupport& h) {
            const MultChar& omega = h.tau->central_character;
            return GL7Support{{2, 2, 1, 1, 1},
                              {cuspidal(h.tau), cuspidal(dual(h.tau)), cuspidal(omega), cuspidal(omega.inverse()),
                               cuspidal(MultChar())}};
          },
          [](const NonHeisenbergSupport& n) {
            GL7Support out{{2, 2}, {cuspidal(n.tau), cuspidal(dual(n.tau))}};
            std::vector<Indecomposable> ad = ad_support_of(n.tau).summands();
            std::stable_sort(ad.begin(), ad.end(), [](const auto& a, const auto& b) { return a.dim() > b.dim(); });
            for (auto& r : ad) {
              out.levi.push_back(r.dim());
              out.reps.push_back(std::move(r));
            }
            return out;
          },
          [](const SupercuspidalSupport& sc) -> GL7Support {
            throw UnsupportedConfiguration("the support map is not defined on the supercuspidal " + sc.label);
          }},
      s.data());
}

WDParam ad_parameter(const G2Support& s) {
  const WDParam v = std_parameter(s);
  const std::optional<WDParam> ad = subtract(exterior_square(v, true), v);
  if (!ad) throw InternalConsistency("std is not contained in its exterior square for " + s.to_string());
  return *ad;
}

}  // namespace g2gamma
