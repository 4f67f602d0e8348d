#pragma once

#include <string>
#include <vector>

#include "swing/fuchsian/ode.hpp"

namespace swing {

struct ExponentAssignment {
  SingularLocation location;
  ExactScalar exponent;
  // For a factor block: how many of its roots take `exponent`; the rest take
  // `other` (asymmetric assignments are only ever reported, never solved).
  int multiplicity = 0;
  ExactScalar other;
};

// y = P(z) * prod (z - z_i)^{e_i} * prod F_j(z)^{e_j}.
struct ExponentialSolution {
  std::vector<ExponentAssignment> exponents;  // finite points, infinity last
  UPoly polynomial;
  int degree = 0;
  // y'/y
  RationalFunction log_derivative;
};

struct ExponentialCandidate {
  std::vector<ExponentAssignment> exponents;
  int degree = 0;
  std::string reason;
};

struct ExponentialSearch {
  std::vector<ExponentialSolution> solutions;
  // Degree-admissible candidates that have no polynomial factor.
  std::vector<ExponentialCandidate> rejected;
  // Degree-admissible candidates outside Q(z): asymmetric block assignments or
  // irrational exponents. Non-empty means the search is inconclusive.
  std::vector<ExponentialCandidate> requires_extension;

  bool conclusive() const { return requires_extension.empty(); }
};

ExponentialSearch find_exponential_solutions(const FuchsianODE& ode);

// omega' + omega^2 + p omega + q for omega = y'/y; zero iff y solves the ODE.
RationalFunction riccati_defect(const FuchsianODE& ode, const RationalFunction& omega);

}  // namespace swing
