#ifndef G2GAMMA_RATFUN_PARSE_HPP
#define G2GAMMA_RATFUN_PARSE_HPP

#include <string_view>

#include "g2gamma/ratfun/scalar.hpp"

namespace g2gamma {

// Parses a symbol-ring expression: integers, rationals, identifiers, the
// reserved q and u, + - * / ^ with integer exponents, and parentheses.
// Unknown identifiers become fresh symbols. Errors are MalformedInput with
// the character offset in the message.
Scalar parse_scalar(std::string_view text);

// Parses a rational number such as "1/2" or "-3".
Rational parse_rational(std::string_view text);

}  // namespace g2gamma

#endif  // G2GAMMA_RATFUN_PARSE_HPP
