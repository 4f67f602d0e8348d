#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swing/elliptic.hpp"

namespace swing {

// Floating-point state on the invariant plane p_phi = 0.
struct PhaseState {
  double r = 1;
  double theta = 0;
  double p_r = 0;
  double p_theta = 0;
};

struct SpringParams {
  double k = 0;
  double a = 0;
  static SpringParams from(const PendulumParams& params) { return {params.k.get_d(), params.a.get_d()}; }
};

// H = (p_r^2 + p_theta^2/r^2)/2 - r cos(theta) + k/2 (r-1)^2 - a/3 (r-1)^3.
// Throws DomainError for r <= 0.
double hamiltonian_energy(const PhaseState& state, const SpringParams& params);

// Time derivative of the state under the reduced Hamilton equations.
PhaseState hamilton_vector_field(const PhaseState& state, const SpringParams& params);

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  // max |H - H0| / max(1, |H0|) over the accepted steps
  double max_relative_drift = 0;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseState> states;  // one per accepted step, start included
  IntegrationStats stats;
};

// Adaptive Runge-Kutta-Fehlberg 7(8) with absolute and relative error
// tolerance `tol`. `duration` may be negative. Throws DomainError when r
// approaches 0 and std::runtime_error on step-size underflow.
Trajectory integrate_orbit(const PhaseState& start, const SpringParams& params, double duration, double tol);

struct SectionSeed {
  double theta = 0;
  double p_theta = 0;
  int p_r_sign = 1;
};

struct SectionPoint {
  double theta = 0;
  double p_theta = 0;
  double t = 0;
  int direction = 1;  // sign of p_r at the crossing
  double r_offset = 0;  // r - 1 at the refined event
  double energy_residual = 0;  // H - E
};

struct SeedSection {
  SectionSeed seed;
  std::vector<SectionPoint> points;
  IntegrationStats stats;
  std::optional<std::string> error;
};

struct SectionOptions {
  std::size_t max_crossings = 500;
  double tol = 1e-12;
  double max_time = 1e4;  // per seed
  double crossing_tol = 1e-10;
  bool both_directions = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Lifts a seed to r = 1 with p_r^2 = 2(E + cos theta) - p_theta^2; throws
// DomainError when that is negative.
PhaseState lift_seed(const SectionSeed& seed, double energy);

// Crossings of r = 1 with p_r > 0 (both signs on request). Seeds fail
// independently; their error is recorded and the batch continues. Output
// order follows the seed order.
std::vector<SeedSection> poincare_section(const SpringParams& params, double energy, const std::vector<SectionSeed>& seeds,
                                          const SectionOptions& options);

// n_theta x n_p_theta grid over [-pi/2, pi/2] x [-1, 1], restricted to seeds
// that lift at `energy`; p_r > 0.
std::vector<SectionSeed> default_seed_grid(double energy, int n_theta, int n_p_theta);

}  // namespace swing
