#include "swing/orbits.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>
#include <thread>

#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "swing/error.hpp"

namespace swing {

namespace {

using State = std::array<double, 4>;  // r, p_r, theta, p_theta
namespace odeint = boost::numeric::odeint;
using Stepper = odeint::runge_kutta_fehlberg78<State>;

State pack(const PhaseState& s) { return {s.r, s.p_r, s.theta, s.p_theta}; }
PhaseState unpack(const State& s) { return {s[0], s[2], s[1], s[3]}; }

// r below this is treated as the coordinate singularity
constexpr double kMinRadius = 1e-6;

struct System {
  SpringParams params;
  void operator()(const State& x, State& dxdt, double /*t*/) const {
    const double r = x[0], pr = x[1], th = x[2], pt = x[3];
    const double u = r - 1;
    dxdt[0] = pr;
    dxdt[1] = pt * pt / (r * r * r) + std::cos(th) - params.k * u + params.a * u * u;
    dxdt[2] = pt / (r * r);
    dxdt[3] = -r * std::sin(th);
  }
};

// Steps adaptively from (x, t), calling on_step(previous, t_previous, x, t, h)
// after every accepted step until it returns false or |t - t0| reaches
// |duration|.
template <class OnStep>
IntegrationStats drive(const System& system, State& x, double& t, double duration, double tol, OnStep on_step) {
  auto stepper = odeint::make_controlled(tol, tol, Stepper());
  IntegrationStats stats;
  const double sign = duration < 0 ? -1 : 1;
  const double t_end = t + duration;
  double dt = sign * std::min(1e-2, std::abs(duration));
  const double h0 = hamiltonian_energy(unpack(x), system.params);
  while (sign * (t_end - t) > 0) {
    if (sign * (t + dt - t_end) > 0) dt = t_end - t;
    const State previous = x;
    const double t_previous = t;
    const auto result = stepper.try_step(system, x, t, dt);
    if (result == odeint::fail) {
      ++stats.rejected;
      if (std::abs(dt) < 1e-14 * std::max(1.0, std::abs(t))) throw std::runtime_error("step size underflow at t = " + std::to_string(t));
      continue;
    }
    ++stats.accepted;
    if (x[0] < kMinRadius) throw DomainError("orbit approaches r = 0 at t = " + std::to_string(t));
    const double h = hamiltonian_energy(unpack(x), system.params);
    stats.max_relative_drift = std::max(stats.max_relative_drift, std::abs(h - h0) / std::max(1.0, std::abs(h0)));
    if (!on_step(previous, t_previous, x, t, t - t_previous)) break;
  }
  return stats;
}

// State after a single (uncontrolled) step of size s from `from`.
State step_from(const System& system, const State& from, double t, double s) {
  Stepper stepper;
  State x = from;
  if (s != 0) stepper.do_step(system, x, t, s);
  return x;
}

SeedSection run_seed(const SpringParams& params, double energy, const SectionSeed& seed, const SectionOptions& options) {
  SeedSection out;
  out.seed = seed;
  try {
    State x = pack(lift_seed(seed, energy));
    double t = 0;
    const System system{params};
    out.stats = drive(system, x, t, options.max_time, options.tol,
                      [&](const State& previous, double t_previous, const State& current, double, double h) {
                        const double g0 = previous[0] - 1, g1 = current[0] - 1;
                        const bool up = g0 < 0 && g1 >= 0, down = g0 > 0 && g1 <= 0;
                        if (!(up || (down && options.both_directions))) return true;
                        // bracket the event inside the accepted step
                        const auto offset = [&](double s) { return step_from(system, previous, t_previous, s)[0] - 1; };
                        boost::uintmax_t iterations = 100;
                        const auto tolerance = [&](double lo, double hi) {
                          return std::abs(hi - lo) <= 1e-15 * std::max(1.0, std::abs(h)) ||
                                 std::min(std::abs(offset(lo)), std::abs(offset(hi))) <= 0.1 * options.crossing_tol;
                        };
                        auto [lo, hi] = boost::math::tools::toms748_solve(offset, 0.0, h, g0, g1, tolerance, iterations);
                        const double s = std::abs(offset(lo)) <= std::abs(offset(hi)) ? lo : hi;
                        const State event = step_from(system, previous, t_previous, s);
                        if (std::abs(event[0] - 1) > options.crossing_tol)
                          throw std::runtime_error("crossing refinement did not reach the tolerance");
                        const PhaseState p = unpack(event);
                        out.points.push_back({p.theta, p.p_theta, t_previous + s, up ? 1 : -1, p.r - 1,
                                              hamiltonian_energy(p, params) - energy});
                        return out.points.size() < options.max_crossings;
                      });
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace

double hamiltonian_energy(const PhaseState& s, const SpringParams& params) {
  if (!(s.r > 0)) throw DomainError("energy needs r > 0");
  const double u = s.r - 1;
  return 0.5 * (s.p_r * s.p_r + s.p_theta * s.p_theta / (s.r * s.r)) - s.r * std::cos(s.theta) + 0.5 * params.k * u * u -
         params.a / 3 * u * u * u;
}

PhaseState hamilton_vector_field(const PhaseState& state, const SpringParams& params) {
  State d{};
  System{params}(pack(state), d, 0);
  return unpack(d);
}

Trajectory integrate_orbit(const PhaseState& start, const SpringParams& params, double duration, double tol) {
  if (!(start.r > 0)) throw DomainError("initial state needs r > 0");
  Trajectory trajectory;
  trajectory.times.push_back(0);
  trajectory.states.push_back(start);
  State x = pack(start);
  double t = 0;
  trajectory.stats = drive(System{params}, x, t, duration, tol, [&](const State&, double, const State& current, double now, double) {
    trajectory.times.push_back(now);
    trajectory.states.push_back(unpack(current));
    return true;
  });
  return trajectory;
}

PhaseState lift_seed(const SectionSeed& seed, double energy) {
  const double p_r2 = 2 * (energy + std::cos(seed.theta)) - seed.p_theta * seed.p_theta;
  if (p_r2 < 0) throw DomainError("seed (" + std::to_string(seed.theta) + ", " + std::to_string(seed.p_theta) + ") does not lift at E = " +
                                  std::to_string(energy));
  return {1.0, seed.theta, (seed.p_r_sign < 0 ? -1 : 1) * std::sqrt(p_r2), seed.p_theta};
}

std::vector<SeedSection> poincare_section(const SpringParams& params, double energy, const std::vector<SectionSeed>& seeds,
                                          const SectionOptions& options) {
  std::vector<SeedSection> results(seeds.size());
  unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, seeds.size())));
  std::vector<std::future<void>> jobs;
  for (unsigned w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < seeds.size(); i += workers) results[i] = run_seed(params, energy, seeds[i], options);
    }));
  for (auto& job : jobs) job.get();
  return results;
}

std::vector<SectionSeed> default_seed_grid(double energy, int n_theta, int n_p_theta) {
  std::vector<SectionSeed> seeds;
  const double half_pi = std::numbers::pi / 2;
  for (int i = 0; i < n_theta; ++i)
    for (int j = 0; j < n_p_theta; ++j) {
      const double theta = n_theta == 1 ? 0 : -half_pi + 2 * half_pi * i / (n_theta - 1);
      const double p_theta = n_p_theta == 1 ? 0 : -1 + 2.0 * j / (n_p_theta - 1);
      if (2 * (energy + std::cos(theta)) - p_theta * p_theta >= 0) seeds.push_back({theta, p_theta, 1});
    }
  return seeds;
}

}  // namespace swing
