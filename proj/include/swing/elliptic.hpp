#pragma once

#include <optional>
#include <string>

#include "swing/exact/exact_scalar.hpp"
#include "swing/exact/laurent.hpp"

namespace swing {

// Generalized spring-pendulum with m = g = l0 = 1:
//   H = (p_r^2 + p_theta^2/r^2)/2 - r cos(theta) + k/2 (r-1)^2 - a/3 (r-1)^3.
struct PendulumParams {
  Rational k;
  Rational a;
  Rational energy;

  enum class Regime { kClassical, kLame, kGeneric };
  Regime regime() const {
    if (a == 0) return Regime::kClassical;
    if (a == -k) return Regime::kLame;
    return Regime::kGeneric;
  }
};

std::string to_string(PendulumParams::Regime regime);

// Weierstrass invariants; discriminant = g2^3 - 27 g3^2.
struct EllipticData {
  Rational g2;
  Rational g3;
  Rational discriminant;
  bool degenerate() const { return discriminant == 0; }
};

EllipticData elliptic_data(const Rational& g2, const Rational& g3);

// Invariants of the radial particular solution after r = (6/a) x + (2a+k)/(2a).
// Throws DomainError for a = 0 (the classical branch is a sphere, not a torus).
EllipticData invariants_from_params(const PendulumParams& params);

// Energies of the two radial equilibria (where the discriminant vanishes).
struct CriticalEnergies {
  ExactScalar stable;
  ExactScalar unstable;
};

// nullopt when k^2 - 4a < 0 (no real critical energies). Throws for a = 0.
std::optional<CriticalEnergies> critical_energies(const Rational& k, const Rational& a);

// Laurent expansion of the Weierstrass function at its pole,
//   t^-2 + sum_{m=2}^{terms} c_m t^{2m-2},
// certified below t^{2 terms}.
LaurentSeries<Rational> wp_series(const Rational& g2, const Rational& g3, int terms);

struct OrbitSeries {
  LaurentSeries<Rational> r;
  LaurentSeries<Rational> p_r;
  EllipticData invariants;
};

// r(t) = (6/a) wp(t) + 1 + k/(2a), p_r = dr/dt, with wp expanded to `terms`
// terms. Throws DomainError for a = 0 or a degenerate discriminant.
OrbitSeries particular_orbit_series(const PendulumParams& params, int terms);

}  // namespace swing
