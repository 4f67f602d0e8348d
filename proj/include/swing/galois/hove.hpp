#pragma once

#include <array>
#include <optional>
#include <vector>

#include "swing/elliptic.hpp"
#include "swing/exact/poly.hpp"
#include "swing/fuchsian/frobenius.hpp"

namespace swing {

using PolySeries = LaurentSeries<Poly>;
using RationalSeries = LaurentSeries<Rational>;

// Coefficient matrix of the first variational equations of
// (r, p_r, theta, p_theta) along the radial orbit.
struct VE1Matrix {
  std::array<std::array<RationalSeries, 4>, 4> entries;
};

struct HoveOrderReport {
  int order = 0;
  int valuation_r = 0;
  int valuation_theta = 0;
  // t^-1 coefficients met while integrating the variation-of-constants
  // equations: tangential (c_a', c_b') then normal (c_a', c_b').
  std::array<Poly, 4> residues;
  bool obstruction = false;
};

struct HoveReport {
  Rational k;
  Rational energy;
  int max_order = 0;
  int budget = 0;  // Frobenius terms of the first-order solutions
  EllipticData invariants;
  Rational tangential_wronskian;
  Rational normal_wronskian;
  std::vector<HoveOrderReport> orders;  // j = 2..max_order, stops after an obstruction
  bool obstruction = false;
  std::optional<int> first_obstruction_order;
};

int default_hove_budget(int max_order);

// Higher-order variational equations of the a = -k spring-pendulum along the
// radial orbit r0 = 1/2 - (6/k) wp(t). First-order solution
//   r1 = c1 u_4 + c2 u_-3,  theta1 = c3 Theta_3 + c4 Theta_-2
// with c1..c4 formal; order j >= 2 is solved by variation of constants with
// zero integration constants.
class HoveEngine {
 public:
  // Throws DomainError unless the discriminant is positive (E strictly between
  // the critical energies) or, without real critical energies, nonzero.
  HoveEngine(const Rational& k, const Rational& energy, int budget);

  HoveReport run(int max_order);

  const VE1Matrix& ve1_matrix() const { return ve1_; }
  const RationalSeries& r0() const { return r0_; }
  const RationalSeries& p_r0() const { return p_r0_; }
  const FrobeniusBasis& tangential_basis() const { return tangential_; }
  const FrobeniusBasis& normal_basis() const { return normal_; }

  // State after run(): component i in (r, p_r, theta, p_theta) at order j.
  const PolySeries& state(int j, int component) const { return state_.at(static_cast<std::size_t>(j))[static_cast<std::size_t>(component)]; }
  // Inhomogeneous parts (p_r, theta, p_theta equations) at order j >= 2.
  const std::array<PolySeries, 3>& forcing(int j) const { return forcing_.at(static_cast<std::size_t>(j)); }

 private:
  struct Pair {
    RationalSeries ya, yb, za, zb;  // columns (y, z) of the fundamental matrix
    Rational wronskian;
  };

  void init_first_order();
  std::array<PolySeries, 3> compute_forcing(int j);
  void finalize(int j);
  // Returns (y, z) and the two residues.
  std::pair<std::array<PolySeries, 2>, std::array<Poly, 2>> vary_constants(const Pair& pair, const PolySeries& f_y,
                                                                           const PolySeries& f_z, int j, const char* block);

  Rational k_, a_, energy_;
  int budget_;
  EllipticData invariants_;
  RationalSeries r0_, p_r0_, w0_;
  FrobeniusBasis tangential_, normal_;
  Pair tangential_pair_, normal_pair_;
  VE1Matrix ve1_;

  std::vector<std::array<PolySeries, 4>> state_;
  std::vector<std::array<PolySeries, 3>> forcing_;
  // eps-coefficients of 1/r, 1/r^2, 1/r^3, p_theta^2, sin(theta), cos(theta)
  std::vector<PolySeries> w_, w2_, w3_, pt2_, sin_, cos_;
};

// Convenience wrapper; budget <= 0 selects default_hove_budget(max_order).
HoveReport hove_obstruction(const Rational& k, const Rational& energy, int max_order, int budget = 0);

}  // namespace swing
