#include "g2gamma/engine/random.hpp"

namespace g2gamma {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

Scalar random_satake_value(std::mt19937_64& rng, bool binomial) {
  static const Rational coefficients[] = {1, -1, 2, Rational(1, 2), -3, Rational(2, 3)};
  Scalar v = coefficients[uniform(rng, 0, 5)];
  v *= Scalar::symbol("x").pow(uniform(rng, -2, 2));
  v *= Scalar::symbol("y").pow(uniform(rng, -1, 1));
  if (binomial && uniform(rng, 0, 3) == 0) v *= Scalar(1) + Scalar::symbol("z");
  if (v.is_rational() && uniform(rng, 0, 1) == 0) v *= Scalar::symbol("x");
  return v;
}

MultChar random_unramified_character(std::mt19937_64& rng, bool binomial) {
  return MultChar::unramified(random_satake_value(rng, binomial), Rational(uniform(rng, -2, 2), 2));
}

G2Support random_torus_support(std::mt19937_64& rng) {
  const MultChar a = random_unramified_character(rng);
  const MultChar b = random_unramified_character(rng);
  return G2Support::torus(a, b);
}

WDParam random_unramified_sum(std::mt19937_64& rng, int n) {
  WDParam v;
  for (int i = 0; i < n; ++i) v += WDParam::character(random_unramified_character(rng));
  return v;
}

WDParam random_parameter(std::mt19937_64& rng, int n) {
  WDParam v;
  int left = n;
  while (left > 0) {
    const int kind = uniform(rng, 0, 3);
    if (kind == 0 && left >= 2) {
      SupercuspidalAtom a;
      const int k = uniform(rng, 1, 3);
      a.label = "rho" + std::to_string(k);
      a.dual_label = "rho" + std::to_string(k) + "_dual";
      a.central_character = MultChar::unramified(Scalar::symbol("w" + std::to_string(k)));
      v += WDParam::atom(make_atom(std::move(a)), random_unramified_character(rng));
      left -= 2;
    } else if (kind == 1) {
      const int sp = uniform(rng, 1, left);
      v += WDParam::character(random_unramified_character(rng), sp);
      left -= sp;
    } else if (kind == 2) {
      v += WDParam::character(MultChar::ramified("eta" + std::to_string(uniform(rng, 1, 2))) *
                              random_unramified_character(rng));
      left -= 1;
    } else {
      v += WDParam::character(random_unramified_character(rng));
      left -= 1;
    }
  }
  return v;
}

Instance random_suite_instance(std::mt19937_64& rng, int k) {
  G2Support pi = random_torus_support(rng);
  return {std::move(pi), random_unramified_sum(rng, 1 + k % 3)};
}

}  // namespace g2gamma
