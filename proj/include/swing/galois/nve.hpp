#pragma once

#include <optional>
#include <string>

#include "swing/elliptic.hpp"
#include "swing/fuchsian/ode.hpp"

namespace swing {

enum class NveVariant { kTimeDomain, kAlgebraicE0, kRiemannConfluence1, kRiemannConfluence2, kLame };

std::string to_string(NveVariant variant);
NveVariant parse_nve_variant(const std::string& text);

// xi'' = (n(n+1) wp + B) xi
struct LameData {
  Rational n;
  Rational B;
  EllipticData invariants;
};

struct NormalVariationalEquation {
  NveVariant variant;
  // Energy actually used; the E0 and confluence variants fix it themselves.
  PendulumParams params;
  // Rational-coefficient form (variables x = wp(t) or z proportional to r).
  std::optional<FuchsianODE> fuchsian;
  // Laurent form at the pole t = 0 of the particular orbit.
  std::optional<SeriesODE> series;
  std::optional<LameData> lame;
  std::string variable;
};

// Energy at which r = 0 lies on the radial orbit: (2(3k+2a)a^2 - 1)/(12a^2).
Rational algebraic_energy(const Rational& k, const Rational& a);
// Confluence energies of the a = 0 branch: -(2k+1)/(2k) and k/2.
Rational confluence1_energy(const Rational& k);
Rational confluence2_energy(const Rational& k);

// Builds the normal variational equation along the radial orbit.
//   kTimeDomain: Phi'' = (r0'' - 1)/r0 Phi with Phi = r0 Theta (series form, any a != 0)
//   kAlgebraicE0: the same equation in x = wp(t) at E = E0 (a not in {0, -k})
//   kRiemannConfluence1/2: a = 0, z = k r/(1+k) resp. z = k r/(2(k+1))
//   kLame: a = -k, n(n+1) = 6, B = k/2 (both rational and series form)
// `terms` controls the wp expansion of the series forms. Throws DomainError
// on a regime mismatch or a degenerate discriminant.
NormalVariationalEquation build_nve(const PendulumParams& params, NveVariant variant, int terms = 16);

}  // namespace swing
