#ifndef G2GAMMA_IO_JSON_HPP
#define G2GAMMA_IO_JSON_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "g2gamma/engine/gamma.hpp"

namespace g2gamma {

// Insertion-ordered so that emitted documents are stable.
using Json = nlohmann::ordered_json;

// Parses text, reporting syntax errors as MalformedInput with line and
// column. `what` names the source in the message.
Json parse_json(const std::string& text, const std::string& what);

// Readers throw MalformedInput prefixed by the JSON path of the offending
// field, e.g. "pi.tau.ad_support[1].sp: expected a positive integer".
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& path);

// {"numerator": {exponent: coefficient}, "denominator": {...}} of the
// normal form.
Json to_json(const LaurentRational& f);
LaurentRational laurent_from_json(const Json& j, const std::string& path);

// {"kind":"unramified","alpha":"a","twist":"1/2"} or
// {"kind":"ramified","label":"chi1","twist":"0"}. A bare string or number
// is read as an unramified alpha.
Json to_json(const MultChar& chi);
MultChar character_from_json(const Json& j, const std::string& path);

Json to_json(const AtomPtr& atom);
AtomPtr atom_from_json(const Json& j, const std::string& path);

// A list of summand records {"character", "atom" | "atoms", "sp"}. The
// string "trivial" reads as the trivial character.
Json to_json(const WDParam& v);
WDParam param_from_json(const Json& j, const std::string& path);

// {"rational": ..., "atoms": [{"left","right","twist","exponent",
// "constituents","ramified"}]}.
Json to_json(const GammaExpr& g);
GammaExpr gamma_from_json(const Json& j, const std::string& path);

// {"family": "torus" | "heisenberg" | "non_heisenberg" | "supercuspidal", ...}.
Json to_json(const G2Support& s);
G2Support support_from_json(const Json& j, const std::string& path);

Json to_json(const GL7Support& f);

// {"path_a","path_b","equal","support","rho","seed"}, plus "error" when a
// path threw.
Json to_json(const TwoPathReport& r, const G2Support& pi, const WDParam& rho, std::optional<std::uint64_t> seed);

}  // namespace g2gamma

#endif  // G2GAMMA_IO_JSON_HPP
