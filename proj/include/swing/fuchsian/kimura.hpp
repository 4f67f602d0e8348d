#pragma once

#include <array>
#include <optional>
#include <string>

#include "swing/exact/exact_scalar.hpp"

namespace swing {

struct KimuraVerdict {
  enum class Outcome { kCaseA, kCaseB, kNotSolvable };
  Outcome outcome = Outcome::kNotSolvable;

  // Case A: which of lambda+mu+nu, -lambda+mu+nu, lambda-mu+nu, lambda+mu-nu
  // (0..3) is the odd integer.
  int sum_index = -1;
  ExactScalar witness_sum;

  // Case B: family row 1..15; slot i of the row receives
  // signs[i] * input[permutation[i]] = base_i + integers[i].
  int family = 0;
  std::array<int, 3> signs{1, 1, 1};
  std::array<int, 3> permutation{0, 1, 2};
  std::array<Integer, 3> integers;  // l, m, q (unused slot of family 1 is 0)

  bool solvable() const { return outcome != Outcome::kNotSolvable; }
};

std::string to_string(KimuraVerdict::Outcome outcome);

// Solvability of the identity component for a Riemann P equation with
// exponent differences lambda, mu, nu.
KimuraVerdict kimura_solvable(const ExactScalar& lambda, const ExactScalar& mu, const ExactScalar& nu);

// Re-checks a returned witness against the table (false for kNotSolvable).
bool verify_witness(const KimuraVerdict& verdict, const ExactScalar& lambda, const ExactScalar& mu, const ExactScalar& nu);

struct KimuraFamily {
  std::array<Rational, 3> base;
  bool arbitrary_third = false;
  bool even_sum = false;
};
// Row 1..15 of the case B table.
const KimuraFamily& kimura_family(int row);

}  // namespace swing
