#include "swing/galois/nve.hpp"

#include "swing/error.hpp"

namespace swing {

namespace {

using Series = LaurentSeries<Rational>;

UPoly weierstrass_cubic(const EllipticData& inv) {
  const UPoly x = UPoly::x();
  return x * x * x * Rational(4) - x * inv.g2 - UPoly(inv.g3);
}

EllipticData nondegenerate_invariants(const PendulumParams& params) {
  const EllipticData inv = invariants_from_params(params);
  if (inv.degenerate()) throw DomainError("degenerate discriminant at E = " + to_string(params.energy));
  return inv;
}

void require_regime(const PendulumParams& params, NveVariant variant) {
  const auto regime = params.regime();
  switch (variant) {
    case NveVariant::kTimeDomain:
      if (regime == PendulumParams::Regime::kClassical) throw DomainError("time-domain form needs a != 0");
      return;
    case NveVariant::kAlgebraicE0:
      if (regime != PendulumParams::Regime::kGeneric) throw DomainError("algebraic-E0 form needs a not in {0, -k}");
      return;
    case NveVariant::kRiemannConfluence1:
    case NveVariant::kRiemannConfluence2:
      if (regime != PendulumParams::Regime::kClassical) throw DomainError("confluent Riemann forms need a = 0");
      if (params.k == 0) throw DomainError("confluent Riemann forms need k != 0");
      if (params.k == -1) throw DomainError("confluent Riemann forms need k != -1");
      return;
    case NveVariant::kLame:
      if (regime != PendulumParams::Regime::kLame) throw DomainError("Lame form needs a = -k");
      return;
  }
}

}  // namespace

std::string to_string(NveVariant variant) {
  switch (variant) {
    case NveVariant::kTimeDomain:
      return "time-domain";
    case NveVariant::kAlgebraicE0:
      return "algebraic-E0";
    case NveVariant::kRiemannConfluence1:
      return "riemann-confluence-1";
    case NveVariant::kRiemannConfluence2:
      return "riemann-confluence-2";
    case NveVariant::kLame:
      return "lame";
  }
  return "unknown";
}

NveVariant parse_nve_variant(const std::string& text) {
  for (auto v : {NveVariant::kTimeDomain, NveVariant::kAlgebraicE0, NveVariant::kRiemannConfluence1, NveVariant::kRiemannConfluence2,
                 NveVariant::kLame})
    if (to_string(v) == text) return v;
  throw ParseError("unknown NVE variant '" + text + "'");
}

Rational algebraic_energy(const Rational& k, const Rational& a) {
  if (a == 0) throw DomainError("E0 needs a != 0");
  return (2 * (3 * k + 2 * a) * a * a - 1) / (12 * a * a);
}

Rational confluence1_energy(const Rational& k) {
  if (k == 0) throw DomainError("confluence 1 needs k != 0");
  return -(2 * k + 1) / (2 * k);
}

Rational confluence2_energy(const Rational& k) { return k / 2; }

NormalVariationalEquation build_nve(const PendulumParams& params, NveVariant variant, int terms) {
  require_regime(params, variant);
  NormalVariationalEquation nve;
  nve.variant = variant;
  nve.params = params;
  const Rational& k = params.k;
  const Rational& a = params.a;
  const UPoly x = UPoly::x();

  switch (variant) {
    case NveVariant::kTimeDomain: {
      const auto orbit = particular_orbit_series(params, terms);
      const Series u = orbit.r - Series::monomial(Rational(1), 0);
      const Series force = scale(u * u, a) - scale(u, k);  // r0'' - 1
      nve.series = SeriesODE{Series(), -(force * invert(orbit.r))};
      nve.variable = "t";
      break;
    }
    case NveVariant::kAlgebraicE0: {
      nve.params.energy = algebraic_energy(k, a);
      const EllipticData inv = nondegenerate_invariants(nve.params);
      const UPoly f = weierstrass_cubic(inv);
      // Phi_xx + f'/(2f) Phi_x + (k^2 - 144 x^2)/(2 (12x + k + 2a) f) Phi = 0
      nve.fuchsian = FuchsianODE::checked(RationalFunction(f.derivative(), f * Rational(2)),
                                          RationalFunction(UPoly(k * k) - x * x * Rational(144), (x * Rational(12) + UPoly(Rational(k + 2 * a))) * f * Rational(2)));
      nve.variable = "x";
      break;
    }
    case NveVariant::kRiemannConfluence1: {
      nve.params.energy = confluence1_energy(k);
      // z = k r/(1+k)
      const UPoly zm1 = x - UPoly(1);
      nve.fuchsian = FuchsianODE::checked(RationalFunction(UPoly(2), x) + RationalFunction(UPoly(1), zm1),
                                          RationalFunction(UPoly(Rational(-1 / (1 + k))), x * zm1 * zm1));
      nve.variable = "z";
      break;
    }
    case NveVariant::kRiemannConfluence2: {
      nve.params.energy = confluence2_energy(k);
      // z = k r/(2(k+1))
      const UPoly one_minus = UPoly(1) - x;
      nve.fuchsian = FuchsianODE::checked(RationalFunction(UPoly(Rational(5, 2)) - x * Rational(3), x * one_minus),
                                          RationalFunction(UPoly(Rational(1 / (2 * (1 + k)))), x * x * one_minus));
      nve.variable = "z";
      break;
    }
    case NveVariant::kLame: {
      const EllipticData inv = nondegenerate_invariants(params);
      nve.lame = LameData{Rational(2), Rational(k / 2), inv};
      const UPoly f = weierstrass_cubic(inv);
      nve.fuchsian = FuchsianODE::checked(RationalFunction(f.derivative(), f * Rational(2)),
                                          RationalFunction(-(x * Rational(6) + UPoly(Rational(k / 2))), f));
      const auto wp = wp_series(inv.g2, inv.g3, terms);
      nve.series = SeriesODE{Series(), -(scale(wp, Rational(6)) + Series::monomial(Rational(k / 2), 0))};
      nve.variable = "t";
      break;
    }
  }
  return nve;
}

}  // namespace swing
