#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "swing/exact/rational.hpp"

namespace swing {

// Polynomial over Q in the formal constants c1..c4 that parametrize the
// general solution of the first variational equations.
//
// Terms are kept sorted by packed monomial key with no zero coefficients, so
// equality and the zero test are structural.
class Poly {
 public:
  static constexpr int kVariables = 4;
  // One byte per exponent, c1 in the low byte.
  using Monomial = std::uint32_t;
  struct Term {
    Monomial monomial;
    Rational coefficient;
  };

  Poly() = default;
  Poly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  // c_{index+1}, index in [0, 4).
  static Poly variable(int index);
  static Monomial pack(const std::array<int, kVariables>& exponents);
  static std::array<int, kVariables> unpack(Monomial monomial);
  static int total_degree(Monomial monomial);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial == 0); }
  Rational constant_term() const;
  int degree() const;
  // Substitute rational values for c1..c4.
  Rational evaluate(const std::array<Rational, kVariables>& values) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& b) { return a *= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Builds a polynomial from unsorted, possibly repeated terms.
  static Poly from_terms(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

// Accumulates many products before a single sort-and-merge; the hot loop of
// series convolution with polynomial coefficients.
class PolyAccumulator {
 public:
  void add_product(const Poly& a, const Poly& b);
  void add(const Poly& a);
  Poly result();

 private:
  std::vector<Poly::Term> pending_;
};

// "3/2*c1^2*c3-c4"; "0" for the zero polynomial.
std::string to_string(const Poly& poly);

}  // namespace swing
