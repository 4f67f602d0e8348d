#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "swing/fuchsian/exponential.hpp"
#include "swing/fuchsian/frobenius.hpp"
#include "swing/fuchsian/kimura.hpp"
#include "swing/galois/nve.hpp"

namespace swing {

// One confluent Riemann equation of the a = 0 branch.
struct ConfluenceResult {
  int index = 0;  // 1 or 2
  Rational energy;
  std::vector<SingularPointData> singular_points;
  std::array<ExactScalar, 3> exponent_differences;
  KimuraVerdict kimura;
  // Integer witness of the explicit family: n >= 2 with k = 1/n^2 - 1 for
  // confluence 1, p with k = -p(p+1)/(p^2+p-2) for confluence 2.
  std::optional<Integer> family_witness;
};

struct ClassicalWitness {
  std::vector<ConfluenceResult> confluences;  // empty for k = 0
  // q^2 = (9k+1)/(k+1) of the family k = (1-q^2)/(q^2-9); q rational iff rational_q.
  std::optional<Rational> churchill_q_squared;
  bool churchill_q_rational = false;
};

struct GenericWitness {
  Rational energy;  // E0
  Rational x0;
  EllipticData invariants;
  std::vector<SingularPointData> singular_points;
  LogFlag log_at_x0 = LogFlag::kNoLog;
  Rational log_obstruction;  // recurrence obstruction at x0
  ExponentialSearch search;
};

struct Verdict {
  enum class Outcome { kNecessaryConditionsPass, kObstruction, kInconclusive };
  enum class Obstruction {
    kNone,
    kKimuraFail,
    kNoExponentialSolutionWithLog,
    kFamilyIntersectionEmpty,
    kHoveResidue
  };
  Outcome outcome = Outcome::kNecessaryConditionsPass;
  Obstruction obstruction = Obstruction::kNone;
  std::string summary;
  std::optional<ClassicalWitness> classical;
  std::optional<GenericWitness> generic;
};

std::string to_string(Verdict::Outcome outcome);
std::string to_string(Verdict::Obstruction obstruction);

// a = 0 branch. Throws DomainError for k = -1.
Verdict classical_verdict(const Rational& k);
// a not in {0, -k}. Throws DomainError otherwise or when E0 is degenerate.
Verdict generic_verdict(const Rational& k, const Rational& a);

// Exact family tests.
std::optional<Integer> confluence1_family_witness(const Rational& k);
std::optional<Integer> confluence2_family_witness(const Rational& k);

}  // namespace swing
