#include "swing/galois/verdict.hpp"

#include <stdexcept>

#include "swing/error.hpp"

namespace swing {

namespace {

ConfluenceResult run_confluence(const Rational& k, int index) {
  const NveVariant variant = index == 1 ? NveVariant::kRiemannConfluence1 : NveVariant::kRiemannConfluence2;
  const auto nve = build_nve({k, Rational(0), Rational(0)}, variant);
  ConfluenceResult result;
  result.index = index;
  result.energy = nve.params.energy;
  result.singular_points = singular_exponents(*nve.fuchsian);
  if (result.singular_points.size() != 3) throw std::logic_error("confluent equation is not a Riemann P equation");
  for (std::size_t i = 0; i < 3; ++i) result.exponent_differences[i] = result.singular_points[i].difference();
  const auto& d = result.exponent_differences;
  result.kimura = kimura_solvable(d[0], d[1], d[2]);
  result.family_witness = index == 1 ? confluence1_family_witness(k) : confluence2_family_witness(k);
  if (result.family_witness.has_value() != result.kimura.solvable())
    throw std::logic_error("Kimura test and explicit family disagree at k = " + to_string(k));
  return result;
}

}  // namespace

std::string to_string(Verdict::Outcome outcome) {
  switch (outcome) {
    case Verdict::Outcome::kNecessaryConditionsPass:
      return "necessary-conditions-pass";
    case Verdict::Outcome::kObstruction:
      return "obstruction";
    case Verdict::Outcome::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

std::string to_string(Verdict::Obstruction obstruction) {
  switch (obstruction) {
    case Verdict::Obstruction::kNone:
      return "none";
    case Verdict::Obstruction::kKimuraFail:
      return "kimura-fail";
    case Verdict::Obstruction::kNoExponentialSolutionWithLog:
      return "no-exponential-solution-with-log";
    case Verdict::Obstruction::kFamilyIntersectionEmpty:
      return "family-intersection-empty";
    case Verdict::Obstruction::kHoveResidue:
      return "hove-residue";
  }
  return "unknown";
}

std::optional<Integer> confluence1_family_witness(const Rational& k) {
  if (k == -1) return std::nullopt;
  // 1/(1+k) = n^2
  Rational n;
  if (!exact_sqrt(Rational(1 / (1 + k)), n) || !is_integer(n) || n < 2) return std::nullopt;
  return n.get_num();
}

std::optional<Integer> confluence2_family_witness(const Rational& k) {
  if (k == -1) return std::nullopt;
  // p^2 + p = 2k/(k+1) = T, so (2p+1)^2 = 1 + 4T
  const Rational t = 2 * k / (k + 1);
  if (!is_integer(t)) return std::nullopt;
  Rational s;
  if (!exact_sqrt(Rational(1 + 4 * t), s) || !is_integer(s)) return std::nullopt;
  const Integer p = (s.get_num() - 1) / 2;
  if (p * p + p - 2 == 0) return std::nullopt;
  return p;
}

Verdict classical_verdict(const Rational& k) {
  if (k == -1) throw DomainError("k = -1 makes both confluence energies singular");
  Verdict verdict;
  ClassicalWitness witness;
  {
    const Rational q2 = (9 * k + 1) / (k + 1);
    witness.churchill_q_squared = q2;
    Rational root;
    witness.churchill_q_rational = exact_sqrt(q2, root);
  }
  if (k == 0) {
    verdict.summary = "k = 0: no elastic force (free fall), integrable";
    verdict.classical = witness;
    return verdict;
  }
  for (int index : {1, 2}) {
    witness.confluences.push_back(run_confluence(k, index));
    const auto& c = witness.confluences.back();
    if (!c.kimura.solvable()) {
      verdict.outcome = Verdict::Outcome::kObstruction;
      verdict.obstruction = Verdict::Obstruction::kKimuraFail;
      verdict.summary = "confluence " + std::to_string(index) + " (E = " + to_string(c.energy) +
                        "): identity component of the Galois group is not solvable";
      break;
    }
  }
  if (verdict.outcome == Verdict::Outcome::kNecessaryConditionsPass)
    verdict.summary = "both confluent Riemann equations have solvable identity components";
  verdict.classical = std::move(witness);
  return verdict;
}

Verdict generic_verdict(const Rational& k, const Rational& a) {
  if (a == 0 || a == -k) throw DomainError("generic verdict needs a not in {0, -k}; use the classical or higher-order pipeline");
  const auto nve = build_nve({k, a, Rational(0)}, NveVariant::kAlgebraicE0);
  const FuchsianODE& ode = *nve.fuchsian;
  GenericWitness witness;
  witness.energy = nve.params.energy;
  witness.x0 = -(2 * a + k) / 12;
  witness.invariants = invariants_from_params(nve.params);
  witness.singular_points = singular_exponents(ode);
  const auto basis = frobenius_basis(ode, witness.x0, 8);
  witness.log_at_x0 = basis.log_flag;
  witness.log_obstruction = basis.obstruction;
  witness.search = find_exponential_solutions(ode);

  Verdict verdict;
  if (!witness.search.solutions.empty()) {
    verdict.summary = "an exponential solution exists; the Galois group is reducible";
  } else if (!witness.search.conclusive()) {
    verdict.outcome = Verdict::Outcome::kInconclusive;
    verdict.summary = "exponential-solution search needs an algebraic extension";
  } else if (witness.log_at_x0 == LogFlag::kLog) {
    verdict.outcome = Verdict::Outcome::kObstruction;
    verdict.obstruction = Verdict::Obstruction::kNoExponentialSolutionWithLog;
    verdict.summary = "logarithm at x0 and no exponential solution: the Galois group is SL(2,C)";
  } else {
    verdict.outcome = Verdict::Outcome::kInconclusive;
    verdict.summary = "no exponential solution, but no logarithm at x0 either";
  }
  verdict.generic = std::move(witness);
  return verdict;
}

}  // namespace swing
