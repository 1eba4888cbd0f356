#ifndef G2GAMMA_ENGINE_RANDOM_HPP
#define G2GAMMA_ENGINE_RANDOM_HPP

#include <random>

#include "g2gamma/g2lift/support.hpp"

namespace g2gamma {

struct Instance {
  G2Support pi;
  WDParam rho;
};

// c * x^i * y^j with small random c, i, j; with `binomial` set, sometimes
// times (1 + z). Characters add a half-integral twist.
Scalar random_satake_value(std::mt19937_64& rng, bool binomial = false);
MultChar random_unramified_character(std::mt19937_64& rng, bool binomial = false);

// Torus support with chi3 = (chi1 chi2)^{-1}.
G2Support random_torus_support(std::mt19937_64& rng);

// Sum of n unramified characters.
WDParam random_unramified_sum(std::mt19937_64& rng, int n);

// Random n-dimensional parameter mixing unramified and ramified
// characters, Sp(k) blocks and 2-dimensional atoms.
WDParam random_parameter(std::mt19937_64& rng, int n);

// Instance k of the two-path suite: a random torus support against a sum of
// 1 + k mod 3 unramified characters.
Instance random_suite_instance(std::mt19937_64& rng, int k);

}  // namespace g2gamma

#endif  // G2GAMMA_ENGINE_RANDOM_HPP
