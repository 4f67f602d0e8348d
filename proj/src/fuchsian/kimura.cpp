#include "swing/fuchsian/kimura.hpp"

#include <algorithm>
#include <vector>

namespace swing {

namespace {

std::vector<KimuraFamily> build_table() {
  auto r = [](long p, long q) -> Rational { return Rational(p) / Rational(q); };
  const Rational half = r(1, 2);
  auto row = [&](Rational a, Rational b, Rational c, bool even) { return KimuraFamily{{a, b, c}, false, even}; };
  std::vector<KimuraFamily> t;
  t.push_back(KimuraFamily{{half, half, Rational(0)}, true, false});
  t.push_back(row(half, r(1, 3), r(1, 3), false));
  t.push_back(row(r(2, 3), r(1, 3), r(1, 3), true));
  t.push_back(row(half, r(1, 3), r(1, 4), false));
  t.push_back(row(r(2, 3), r(1, 4), r(1, 4), true));
  t.push_back(row(half, r(1, 3), r(1, 5), false));
  t.push_back(row(r(2, 5), r(1, 3), r(1, 3), true));
  t.push_back(row(r(2, 3), r(1, 5), r(1, 5), true));
  t.push_back(row(half, r(2, 5), r(1, 5), true));
  t.push_back(row(r(3, 5), r(1, 3), r(1, 5), true));
  t.push_back(row(r(2, 5), r(2, 5), r(2, 5), true));
  t.push_back(row(r(2, 3), r(1, 3), r(1, 5), true));
  t.push_back(row(r(4, 5), r(1, 5), r(1, 5), true));
  t.push_back(row(half, r(2, 5), r(1, 3), true));
  t.push_back(row(r(3, 5), r(2, 5), r(1, 3), true));
  return t;
}

const std::vector<KimuraFamily>& table() {
  static const std::vector<KimuraFamily> t = build_table();
  return t;
}

std::optional<ExactScalar> case_a_sum(int index, const std::array<ExactScalar, 3>& v) {
  static constexpr int kSigns[4][3] = {{1, 1, 1}, {-1, 1, 1}, {1, -1, 1}, {1, 1, -1}};
  std::optional<ExactScalar> sum = v[0] * Rational(kSigns[index][0]);
  for (int i = 1; i < 3 && sum; ++i) sum = sum->try_add(v[static_cast<std::size_t>(i)] * Rational(kSigns[index][i]));
  return sum;
}

// Rational value split as floor + fractional part in [0, 1).
struct Residue {
  bool rational = false;
  Rational fraction;
  Integer floor;
};

Residue residue_of(const ExactScalar& x) {
  Residue r;
  if (!x.is_rational()) return r;
  r.rational = true;
  r.floor = floor_of(x.rational_part());
  r.fraction = x.rational_part() - Rational(r.floor);
  return r;
}

// Integers l, m, q fitting the row for this slot assignment, if any. Every
// base lies in (0, 1), so the integer is the floor whenever the fractions match.
std::optional<std::array<Integer, 3>> fit_row(const KimuraFamily& family, const std::array<const Residue*, 3>& slots) {
  std::array<Integer, 3> ints;
  for (std::size_t i = 0; i < 3; ++i) {
    if (i == 2 && family.arbitrary_third) {
      ints[2] = 0;
      continue;
    }
    const Residue& r = *slots[i];
    if (!r.rational || r.fraction != family.base[i]) return std::nullopt;
    ints[i] = r.floor;
  }
  if (family.even_sum) {
    const Integer total = ints[0] + ints[1] + ints[2];
    if (mpz_even_p(total.get_mpz_t()) == 0) return std::nullopt;
  }
  return ints;
}

std::array<ExactScalar, 3> slots_of(const std::array<ExactScalar, 3>& v, const std::array<int, 3>& signs, const std::array<int, 3>& perm) {
  std::array<ExactScalar, 3> slots;
  for (std::size_t i = 0; i < 3; ++i) slots[i] = v[static_cast<std::size_t>(perm[i])] * Rational(signs[i]);
  return slots;
}

}  // namespace

const KimuraFamily& kimura_family(int row) { return table().at(static_cast<std::size_t>(row - 1)); }

std::string to_string(KimuraVerdict::Outcome outcome) {
  switch (outcome) {
    case KimuraVerdict::Outcome::kCaseA:
      return "solvable_case_A";
    case KimuraVerdict::Outcome::kCaseB:
      return "solvable_case_B";
    case KimuraVerdict::Outcome::kNotSolvable:
      return "not_solvable";
  }
  return "unknown";
}

KimuraVerdict kimura_solvable(const ExactScalar& lambda, const ExactScalar& mu, const ExactScalar& nu) {
  const std::array<ExactScalar, 3> v{lambda, mu, nu};
  KimuraVerdict verdict;
  for (int index = 0; index < 4; ++index) {
    const auto sum = case_a_sum(index, v);
    if (sum && sum->is_odd_integer()) {
      verdict.outcome = KimuraVerdict::Outcome::kCaseA;
      verdict.sum_index = index;
      verdict.witness_sum = *sum;
      return verdict;
    }
  }
  // residues[i][0] for +v[i], residues[i][1] for -v[i]
  std::array<std::array<Residue, 2>, 3> residues;
  for (std::size_t i = 0; i < 3; ++i) {
    residues[i][0] = residue_of(v[i]);
    residues[i][1] = residue_of(-v[i]);
  }
  for (int row = 1; row <= 15; ++row) {
    const KimuraFamily& family = kimura_family(row);
    for (int sign_bits = 0; sign_bits < 8; ++sign_bits) {
      const std::array<int, 3> signs{(sign_bits & 1) ? -1 : 1, (sign_bits & 2) ? -1 : 1, (sign_bits & 4) ? -1 : 1};
      std::array<int, 3> perm{0, 1, 2};
      do {
        std::array<const Residue*, 3> slots;
        for (std::size_t i = 0; i < 3; ++i) slots[i] = &residues[static_cast<std::size_t>(perm[i])][signs[i] < 0 ? 1 : 0];
        if (const auto ints = fit_row(family, slots)) {
          verdict.outcome = KimuraVerdict::Outcome::kCaseB;
          verdict.family = row;
          verdict.signs = signs;
          verdict.permutation = perm;
          verdict.integers = *ints;
          return verdict;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return verdict;
}

bool verify_witness(const KimuraVerdict& verdict, const ExactScalar& lambda, const ExactScalar& mu, const ExactScalar& nu) {
  const std::array<ExactScalar, 3> v{lambda, mu, nu};
  switch (verdict.outcome) {
    case KimuraVerdict::Outcome::kCaseA: {
      if (verdict.sum_index < 0 || verdict.sum_index > 3) return false;
      const auto sum = case_a_sum(verdict.sum_index, v);
      return sum && *sum == verdict.witness_sum && sum->is_odd_integer();
    }
    case KimuraVerdict::Outcome::kCaseB: {
      if (verdict.family < 1 || verdict.family > 15) return false;
      const KimuraFamily& family = kimura_family(verdict.family);
      const auto slots = slots_of(v, verdict.signs, verdict.permutation);
      for (std::size_t i = 0; i < 3; ++i) {
        if (i == 2 && family.arbitrary_third) continue;
        if (slots[i] != ExactScalar(Rational(family.base[i] + Rational(verdict.integers[i])))) return false;
      }
      if (family.even_sum && mpz_odd_p(Integer(verdict.integers[0] + verdict.integers[1] + verdict.integers[2]).get_mpz_t()) != 0)
        return false;
      return true;
    }
    case KimuraVerdict::Outcome::kNotSolvable:
      return false;
  }
  return false;
}

}  // namespace swing
