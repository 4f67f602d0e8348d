#include <cmath>

#include "doctest.h"
#include "swing/error.hpp"
#include "swing/orbits.hpp"

using namespace swing;

namespace {

const SpringParams kFig1{4.0 / 3, -4.0 / 3};
constexpr double kFig1Energy = -0.8;

}  // namespace

TEST_SUITE("orbits") {

TEST_CASE("energy examples") {
  CHECK(hamiltonian_energy({1, 0, 0, 0}, {3, 2}) == doctest::Approx(-1).epsilon(1e-15));
  CHECK(hamiltonian_energy({2, 0, 0, 0}, {3, 2}) == doctest::Approx(-7.0 / 6).epsilon(1e-15));
  const PhaseState s{1.3, 0.4, 0.2, -0.7};
  const PhaseState m{1.3, -0.4, 0.2, 0.7};
  CHECK(hamiltonian_energy(s, kFig1) == hamiltonian_energy(m, kFig1));
  CHECK_THROWS_AS(hamiltonian_energy({0, 0, 0, 0}, kFig1), DomainError);
}

TEST_CASE("vector field is Hamiltonian") {
  // compare with centred differences of H
  const PhaseState s{1.2, 0.3, -0.1, 0.25};
  const double h = 1e-6;
  const auto H = [&](PhaseState x) { return hamiltonian_energy(x, kFig1); };
  const PhaseState d = hamilton_vector_field(s, kFig1);
  auto bump = [&](double PhaseState::*field, double by) {
    PhaseState x = s;
    x.*field += by;
    return H(x);
  };
  CHECK(d.r == doctest::Approx((bump(&PhaseState::p_r, h) - bump(&PhaseState::p_r, -h)) / (2 * h)).epsilon(1e-8));
  CHECK(d.p_r == doctest::Approx(-(bump(&PhaseState::r, h) - bump(&PhaseState::r, -h)) / (2 * h)).epsilon(1e-8));
  CHECK(d.theta == doctest::Approx((bump(&PhaseState::p_theta, h) - bump(&PhaseState::p_theta, -h)) / (2 * h)).epsilon(1e-8));
  CHECK(d.p_theta == doctest::Approx(-(bump(&PhaseState::theta, h) - bump(&PhaseState::theta, -h)) / (2 * h)).epsilon(1e-8));
}

TEST_CASE("equilibrium stays put") {
  const auto traj = integrate_orbit({1.5, 0, 0, 0}, {3, 2}, 50, 1e-12);
  for (const auto& s : traj.states) {
    CHECK(std::abs(s.r - 1.5) < 1e-12);
    CHECK(std::abs(s.p_r) < 1e-12);
  }
}

TEST_CASE("invariant manifold and radial quadrature") {
  const SpringParams params{3, 2};
  const PhaseState start{1.4, 0, 0.1, 0};  // below E_u = -7/6, bounded
  const double e = hamiltonian_energy(start, params);
  const auto traj = integrate_orbit(start, params, 100, 1e-12);
  CHECK(traj.states.size() > 100);
  for (const auto& s : traj.states) {
    CHECK(s.theta == 0);
    CHECK(s.p_theta == 0);
    const double u = s.r - 1;
    const double rhs = 2 * (e + s.r - params.k / 2 * u * u + params.a / 3 * u * u * u);
    CHECK(std::abs(s.p_r * s.p_r - rhs) < 1e-9);
  }
}

TEST_CASE("energy drift and reversibility") {
  const double tol = 1e-12;
  const PhaseState start = lift_seed({0.3, 0.1, 1}, kFig1Energy);
  const auto forward = integrate_orbit(start, kFig1, 200, tol);
  CHECK(forward.stats.max_relative_drift <= 100 * tol);
  CHECK(forward.stats.accepted > 0);
  // forward then backward over T = 10
  const auto short_forward = integrate_orbit(start, kFig1, 10, tol);
  const auto short_back = integrate_orbit(short_forward.states.back(), kFig1, -10, tol);
  const PhaseState s = short_back.states.back();
  CHECK(std::abs(s.r - start.r) <= 10 * tol);
  CHECK(std::abs(s.theta - start.theta) <= 10 * tol);
  CHECK(std::abs(s.p_r - start.p_r) <= 10 * tol);
  CHECK(std::abs(s.p_theta - start.p_theta) <= 10 * tol);
}

TEST_CASE("seed lifting") {
  const PhaseState s = lift_seed({0, 0, -1}, kFig1Energy);
  CHECK(s.r == 1);
  CHECK(s.p_r == doctest::Approx(-std::sqrt(0.4)));
  CHECK_THROWS_AS(lift_seed({0, 1, 1}, kFig1Energy), DomainError);
  for (const auto& seed : default_seed_grid(kFig1Energy, 9, 9)) CHECK_NOTHROW(lift_seed(seed, kFig1Energy));
}

TEST_CASE("section of the invariant manifold seed") {
  SectionOptions options;
  options.max_crossings = 20;
  const auto out = poincare_section(kFig1, kFig1Energy, {{0, 0, 1}}, options);
  REQUIRE(out.size() == 1);
  REQUIRE_FALSE(out[0].error);
  CHECK(out[0].points.size() == 20);
  for (const auto& p : out[0].points) {
    CHECK(p.theta == 0);
    CHECK(p.p_theta == 0);
    CHECK(std::abs(p.r_offset) <= 1e-10);
  }
}

TEST_CASE("section points satisfy the event and energy bounds") {
  SectionOptions options;
  options.max_crossings = 40;
  const std::vector<SectionSeed> seeds{{0.2, 0.1, 1}, {-0.3, 0.05, 1}, {0.1, -0.3, 1}, {0, 1, 1}};
  const auto out = poincare_section(kFig1, kFig1Energy, seeds, options);
  REQUIRE(out.size() == 4);
  for (int i = 0; i < 3; ++i) {
    REQUIRE_FALSE(out[i].error);
    CHECK(out[i].points.size() == 40);
    double last_t = 0;
    for (const auto& p : out[i].points) {
      CHECK(std::abs(p.r_offset) <= 1e-10);
      CHECK(std::abs(p.energy_residual) <= 1e-9);
      CHECK(p.direction == 1);
      CHECK(p.t > last_t);
      last_t = p.t;
    }
  }
  // unliftable seed fails alone
  CHECK(out[3].error.has_value());
  CHECK(out[3].points.empty());
}

TEST_CASE("reflected seeds give the reflected section") {
  SectionOptions options;
  options.max_crossings = 15;
  const auto a = poincare_section(kFig1, kFig1Energy, {{0.25, 0.15, 1}}, options);
  const auto b = poincare_section(kFig1, kFig1Energy, {{-0.25, -0.15, 1}}, options);
  REQUIRE(a[0].points.size() == b[0].points.size());
  for (std::size_t i = 0; i < a[0].points.size(); ++i) {
    CHECK(a[0].points[i].theta == doctest::Approx(-b[0].points[i].theta).epsilon(1e-9));
    CHECK(a[0].points[i].p_theta == doctest::Approx(-b[0].points[i].p_theta).epsilon(1e-9));
  }
}

TEST_CASE("sections are deterministic across thread counts") {
  SectionOptions options;
  options.max_crossings = 10;
  const auto seeds = default_seed_grid(kFig1Energy, 7, 7);
  REQUIRE(seeds.size() >= 3);
  options.threads = 1;
  const auto a = poincare_section(kFig1, kFig1Energy, seeds, options);
  options.threads = 3;
  const auto b = poincare_section(kFig1, kFig1Energy, seeds, options);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].points.size() == b[i].points.size());
    for (std::size_t j = 0; j < a[i].points.size(); ++j) {
      CHECK(a[i].points[j].theta == b[i].points[j].theta);
      CHECK(a[i].points[j].p_theta == b[i].points[j].p_theta);
      CHECK(a[i].points[j].t == b[i].points[j].t);
    }
  }
}

}  // TEST_SUITE
