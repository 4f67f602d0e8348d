#include <random>

#include "doctest.h"
#include "swing/error.hpp"
#include "swing/galois/nve.hpp"
#include "swing/galois/verdict.hpp"

using namespace swing;
using Series = LaurentSeries<Rational>;

namespace {

const UPoly z = UPoly::x();

// f(s z)
UPoly rescale(const UPoly& f, const Rational& s) {
  std::vector<Rational> c = f.coefficients();
  Rational power(1);
  for (auto& v : c) {
    v *= power;
    power *= s;
  }
  return UPoly(c);
}

RationalFunction rescale(const RationalFunction& f, const Rational& s) {
  return RationalFunction(rescale(f.numerator(), s), rescale(f.denominator(), s));
}

// Angular variational equation d/dt(r^2 Theta') = -r Theta along the a = 0
// radial orbit, rewritten with r as independent variable using
// r'^2 = F(r) = 2(E + r - k/2 (r-1)^2), then z = c r.
FuchsianODE angular_equation_in_z(const Rational& k, const Rational& energy, const Rational& c) {
  const UPoly one(1);
  const UPoly F = UPoly(Rational(2 * energy)) + z * Rational(2) - (z - one) * (z - one) * k;
  const RationalFunction p = RationalFunction(UPoly(2), z) + RationalFunction(F.derivative(), F * Rational(2));
  const RationalFunction q = RationalFunction(UPoly(1), z * F);
  const Rational inv = 1 / c;
  return FuchsianODE(rescale(p, inv) * RationalFunction(inv), rescale(q, inv) * RationalFunction(Rational(inv * inv)));
}

bool agree(const Series& a, const Series& b, int upto) {
  for (int n = std::min(a.lowest_exponent(), b.lowest_exponent()); n < upto; ++n)
    if (a.coefficient(n) != b.coefficient(n)) return false;
  return true;
}

Rational random_rational(std::mt19937& rng, int span, int den) {
  std::uniform_int_distribution<int> num(-span, span), d(1, den);
  return Rational(num(rng)) / Rational(d(rng));
}

}  // namespace

TEST_SUITE("galois") {

TEST_CASE("variant names round-trip") {
  for (auto v : {NveVariant::kTimeDomain, NveVariant::kAlgebraicE0, NveVariant::kRiemannConfluence1, NveVariant::kRiemannConfluence2,
                 NveVariant::kLame})
    CHECK(parse_nve_variant(to_string(v)) == v);
  CHECK_THROWS_AS(parse_nve_variant("riemann"), ParseError);
}

TEST_CASE("regime checks") {
  const Rational k(4, 3);
  CHECK_THROWS_AS(build_nve({k, Rational(0), Rational(0)}, NveVariant::kLame), DomainError);
  CHECK_THROWS_AS(build_nve({k, Rational(1), Rational(0)}, NveVariant::kRiemannConfluence1), DomainError);
  CHECK_THROWS_AS(build_nve({k, -k, Rational(0)}, NveVariant::kAlgebraicE0), DomainError);
  CHECK_THROWS_AS(build_nve({k, Rational(0), Rational(0)}, NveVariant::kTimeDomain), DomainError);
  CHECK_THROWS_AS(build_nve({Rational(0), Rational(0), Rational(0)}, NveVariant::kRiemannConfluence2), DomainError);
  // E = E_u for k = 4/3 on the Lame branch
  CHECK_THROWS_AS(build_nve({k, -k, Rational(1, 2)}, NveVariant::kLame), DomainError);
}

TEST_CASE("Lame form at a = -k") {
  const Rational k(4, 3);
  const auto nve = build_nve({k, -k, Rational(-4, 5)}, NveVariant::kLame, 12);
  REQUIRE(nve.lame);
  CHECK(nve.lame->n * (nve.lame->n + 1) == 6);
  CHECK(nve.lame->B == Rational(2, 3));
  const EllipticData inv = invariants_from_params({k, -k, Rational(-4, 5)});
  CHECK(nve.lame->invariants.g2 == inv.g2);
  CHECK(nve.lame->invariants.g3 == inv.g3);
  // xi'' = (6 wp + 2/3) xi
  const Series wp = wp_series(inv.g2, inv.g3, 12);
  const Series expected = -(scale(wp, Rational(6)) + Series::monomial(Rational(2, 3), 0));
  CHECK(agree(nve.series->q, expected, nve.series->q.order()));
  CHECK(nve.series->p.is_zero());
}

TEST_CASE("time-domain form matches the angular equation") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const Rational k = random_rational(rng, 9, 4);
    Rational a = random_rational(rng, 9, 4);
    if (a == 0) a = 1;
    const Rational e = random_rational(rng, 9, 5);
    const PendulumParams params{k, a, e};
    if (invariants_from_params(params).degenerate()) continue;
    const auto nve = build_nve(params, NveVariant::kTimeDomain, 12);
    const auto orbit = particular_orbit_series(params, 12);
    // Phi = r0 Theta in r0 Theta'' + 2 r0' Theta' + Theta = 0 gives Phi'' = (r0'' - 1)/r0 Phi.
    const Series rdd = derivative(derivative(orbit.r));
    const Series expected = -((rdd - Series::monomial(Rational(1), 0)) * invert(orbit.r));
    const int upto = std::min(expected.order(), nve.series->q.order());
    CHECK(upto >= 8);
    CHECK(agree(nve.series->q, expected, upto));
  }
}

TEST_CASE("time-domain form collapses to the Lame form at a = -k") {
  for (const Rational& k : {Rational(4, 3), Rational(1), Rational(5, 2), Rational(-2, 7)}) {
    const PendulumParams params{k, -k, Rational(-4, 5)};
    if (invariants_from_params(params).degenerate()) continue;
    const auto t = build_nve(params, NveVariant::kTimeDomain, 12);
    const auto l = build_nve(params, NveVariant::kLame, 12);
    const int upto = std::min(t.series->q.order(), l.series->q.order());
    CHECK(upto >= 8);
    CHECK(agree(t.series->q, l.series->q, upto));
  }
}

TEST_CASE("confluent Riemann forms follow from the angular equation") {
  for (const Rational& k : {Rational(1), Rational(-3, 4), Rational(2, 5), Rational(-7, 3), Rational(8)}) {
    const auto c1 = build_nve({k, Rational(0), Rational(0)}, NveVariant::kRiemannConfluence1);
    CHECK(c1.params.energy == -(2 * k + 1) / (2 * k));
    const auto o1 = angular_equation_in_z(k, c1.params.energy, k / (1 + k));
    CHECK(c1.fuchsian->p() == o1.p());
    CHECK(c1.fuchsian->q() == o1.q());

    const auto c2 = build_nve({k, Rational(0), Rational(0)}, NveVariant::kRiemannConfluence2);
    CHECK(c2.params.energy == k / 2);
    const auto o2 = angular_equation_in_z(k, c2.params.energy, k / (2 * (k + 1)));
    CHECK(c2.fuchsian->p() == o2.p());
    CHECK(c2.fuchsian->q() == o2.q());
  }
}

TEST_CASE("confluence 1 at k = -3/4 has the displayed coefficients") {
  const auto nve = build_nve({Rational(-3, 4), Rational(0), Rational(0)}, NveVariant::kRiemannConfluence1);
  const UPoly one(1);
  CHECK(nve.fuchsian->p() == RationalFunction(UPoly(2), z) + RationalFunction(one, z - one));
  CHECK(nve.fuchsian->q() == RationalFunction(UPoly(-4), z * (z - one) * (z - one)));
}

TEST_CASE("algebraic-E0 form for k = a = 1") {
  const auto nve = build_nve({Rational(1), Rational(1), Rational(0)}, NveVariant::kAlgebraicE0);
  CHECK(nve.params.energy == Rational(3, 4));
  const auto points = singular_exponents(*nve.fuchsian);
  int finite_weight = 0;
  bool has_x0 = false, has_infinity = false;
  for (const auto& p : points) {
    if (p.location == SingularLocation::at(Rational(-1, 4))) has_x0 = true;
    if (p.location.kind == SingularLocation::Kind::kInfinity) has_infinity = true;
    else finite_weight += p.location.weight();
  }
  CHECK(has_x0);
  CHECK(has_infinity);
  CHECK(finite_weight == 4);  // x0 and the three roots of 4x^3 - g2 x - g3
  CHECK(algebraic_energy(Rational(2), Rational(3)) == Rational(215, 108));
}

TEST_CASE("family witnesses") {
  CHECK(*confluence1_family_witness(Rational(-3, 4)) == 2);
  CHECK(*confluence1_family_witness(Rational(-8, 9)) == 3);
  CHECK_FALSE(confluence1_family_witness(Rational(0)));
  CHECK_FALSE(confluence1_family_witness(Rational(1)));
  // p = 1: k = -2/0 excluded; p = 2: k = -6/4
  CHECK(confluence2_family_witness(Rational(-3, 2)).has_value());
  CHECK_FALSE(confluence2_family_witness(Rational(-3, 4)));
  for (int p = -8; p <= 8; ++p) {
    if (p * p + p - 2 == 0) continue;
    const Rational k = Rational(-p * (p + 1)) / Rational(p * p + p - 2);
    const auto w = confluence2_family_witness(k);
    REQUIRE(w.has_value());
    CHECK((*w * *w + *w) == Integer(p * (p + 1)));
  }
}

TEST_CASE("classical verdict examples") {
  const auto v0 = classical_verdict(Rational(0));
  CHECK(v0.outcome == Verdict::Outcome::kNecessaryConditionsPass);

  const auto v1 = classical_verdict(Rational(1));
  CHECK(v1.outcome == Verdict::Outcome::kObstruction);
  CHECK(v1.obstruction == Verdict::Obstruction::kKimuraFail);
  REQUIRE(v1.classical);
  REQUIRE(v1.classical->confluences.size() == 1);
  CHECK(v1.classical->confluences[0].index == 1);
  CHECK(!v1.classical->confluences[0].kimura.solvable());

  const auto v2 = classical_verdict(Rational(-3, 4));
  CHECK(v2.outcome == Verdict::Outcome::kObstruction);
  REQUIRE(v2.classical->confluences.size() == 2);
  CHECK(v2.classical->confluences[0].kimura.solvable());
  CHECK(*v2.classical->confluences[0].family_witness == 2);
  CHECK(!v2.classical->confluences[1].kimura.solvable());

  CHECK_THROWS_AS(classical_verdict(Rational(-1)), DomainError);
}

TEST_CASE("classical verdict agrees with Kimura on confluence 1 over a grid") {
  std::vector<Rational> grid;
  for (int n = 2; n <= 8; ++n) grid.push_back(1 / Rational(n * n) - 1);
  for (int p = -5; p <= 5; ++p)
    if (p * p + p - 2 != 0) grid.push_back(Rational(-p * (p + 1)) / Rational(p * p + p - 2));
  for (int num = -9; num <= 9; ++num)
    for (int den : {1, 2, 3, 4, 7})
      if (Rational(num) / Rational(den) != -1) grid.push_back(Rational(num) / Rational(den));
  for (const Rational& k : grid) {
    CAPTURE(to_string(k));
    const auto v = classical_verdict(k);
    if (k == 0) {
      CHECK(v.outcome == Verdict::Outcome::kNecessaryConditionsPass);
      continue;
    }
    const auto& first = v.classical->confluences.front();
    CHECK(first.kimura.solvable() == first.family_witness.has_value());
    if (!first.kimura.solvable()) CHECK(v.outcome == Verdict::Outcome::kObstruction);
    // only k = 0 lies in both families
    CHECK(v.outcome == Verdict::Outcome::kObstruction);
  }
}

TEST_CASE("Churchill family context") {
  const auto v = classical_verdict(Rational(-3, 4));
  REQUIRE(v.classical->churchill_q_squared);
  CHECK(*v.classical->churchill_q_squared == Rational(-23, 1));
  CHECK_FALSE(v.classical->churchill_q_rational);
  // q = 2: k = 3/5
  const auto w = classical_verdict(Rational(3, 5));
  CHECK(*w.classical->churchill_q_squared == 4);
  CHECK(w.classical->churchill_q_rational);
}

TEST_CASE("generic verdict examples") {
  for (const auto& [k, a, e0] : {std::tuple{Rational(1), Rational(1), Rational(3, 4)}, std::tuple{Rational(2), Rational(3), Rational(215, 108)}}) {
    const auto v = generic_verdict(k, a);
    CHECK(v.outcome == Verdict::Outcome::kObstruction);
    CHECK(v.obstruction == Verdict::Obstruction::kNoExponentialSolutionWithLog);
    REQUIRE(v.generic);
    CHECK(v.generic->energy == e0);
    CHECK(v.generic->log_at_x0 == LogFlag::kLog);
    CHECK(v.generic->log_obstruction != 0);
    CHECK(v.generic->search.solutions.empty());
    CHECK(v.generic->search.conclusive());
    // the single degree-admissible candidate is (x - x0) times the block factors
    REQUIRE(v.generic->search.rejected.size() == 1);
    bool x0_exponent_one = false;
    for (const auto& e : v.generic->search.rejected[0].exponents)
      if (e.location == SingularLocation::at(v.generic->x0)) x0_exponent_one = e.exponent == ExactScalar(1);
    CHECK(x0_exponent_one);
  }
  CHECK_THROWS_AS(generic_verdict(Rational(2), Rational(-2)), DomainError);
  CHECK_THROWS_AS(generic_verdict(Rational(2), Rational(0)), DomainError);
}

TEST_CASE("generic verdict over random pairs") {
  std::mt19937 rng(11);
  int done = 0;
  while (done < 10) {
    const Rational k = random_rational(rng, 12, 5);
    const Rational a = random_rational(rng, 12, 5);
    if (a == 0 || a == -k) continue;
    Verdict v;
    try {
      v = generic_verdict(k, a);
    } catch (const DomainError&) {
      continue;  // degenerate discriminant at E0
    }
    CAPTURE(to_string(k));
    CAPTURE(to_string(a));
    CHECK(v.obstruction == Verdict::Obstruction::kNoExponentialSolutionWithLog);
    ++done;
  }
}

}  // TEST_SUITE
