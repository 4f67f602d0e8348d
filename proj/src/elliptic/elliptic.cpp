#include "swing/elliptic.hpp"

#include "swing/error.hpp"

namespace swing {

std::string to_string(PendulumParams::Regime regime) {
  switch (regime) {
    case PendulumParams::Regime::kClassical:
      return "classical";
    case PendulumParams::Regime::kLame:
      return "lame";
    case PendulumParams::Regime::kGeneric:
      return "generic";
  }
  return "unknown";
}

EllipticData elliptic_data(const Rational& g2, const Rational& g3) {
  return {g2, g3, Rational(g2 * g2 * g2 - 27 * g3 * g3)};
}

EllipticData invariants_from_params(const PendulumParams& params) {
  const Rational& k = params.k;
  const Rational& a = params.a;
  if (a == 0) throw DomainError("invariants need a != 0; the a = 0 orbit is not elliptic");
  const Rational g2 = (k * k - 4 * a) / 12;
  const Rational g3 = (k * k * k - 6 * a * k - 12 * a * a * (params.energy + 1)) / 216;
  return elliptic_data(g2, g3);
}

std::optional<CriticalEnergies> critical_energies(const Rational& k, const Rational& a) {
  if (a == 0) throw DomainError("critical energies need a != 0");
  const Rational disc = k * k - 4 * a;
  if (disc < 0) return std::nullopt;
  const Rational base = k * k * k - 6 * a * (k + 2 * a);
  const Rational denom = 12 * a * a;
  // disc^{3/2} = disc * sqrt(disc)
  const ExactScalar root = ExactScalar::sqrt_of(disc) * disc;
  const ExactScalar plus = (root + base) * (Rational(1) / denom);
  const ExactScalar minus = ((-root) + base) * (Rational(1) / denom);
  return CriticalEnergies{minus, plus};
}

LaurentSeries<Rational> wp_series(const Rational& g2, const Rational& g3, int terms) {
  if (terms < 1) throw std::invalid_argument("wp_series needs at least one term");
  // c[m] multiplies t^{2m-2} for m >= 2; c[0], c[1] unused.
  std::vector<Rational> c(static_cast<std::size_t>(terms + 1), Rational(0));
  if (terms >= 2) c[2] = g2 / 20;
  if (terms >= 3) c[3] = g3 / 28;
  // m = 3 is seeded directly: (2m+1)(m-3) vanishes there.
  for (int m = 4; m <= terms; ++m) {
    Rational sum(0);
    for (int j = 2; j <= m - 2; ++j) sum += c[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(m - j)];
    c[static_cast<std::size_t>(m)] = Rational(3) / Rational((2 * m + 1) * (m - 3)) * sum;
  }
  // index = exponent + 2; c_m sits at t^{2m-2}
  std::vector<Rational> coeffs(static_cast<std::size_t>(2 * terms + 1), Rational(0));
  coeffs[0] = 1;
  for (int m = 2; m <= terms; ++m) coeffs[static_cast<std::size_t>(2 * m)] = c[static_cast<std::size_t>(m)];
  return LaurentSeries<Rational>(-2, std::move(coeffs), 2 * terms);
}

OrbitSeries particular_orbit_series(const PendulumParams& params, int terms) {
  const EllipticData inv = invariants_from_params(params);
  if (inv.degenerate()) throw DomainError("degenerate discriminant: the energy sits at a radial equilibrium");
  const auto wp = wp_series(inv.g2, inv.g3, terms);
  const Rational& a = params.a;
  auto r = scale(wp, Rational(6 / a)) + LaurentSeries<Rational>::monomial(Rational(1 + params.k / (2 * a)), 0);
  auto p_r = derivative(r);
  return {std::move(r), std::move(p_r), inv};
}

}  // namespace swing
