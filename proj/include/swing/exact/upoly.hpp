#pragma once

#include <string>
#include <utility>
#include <vector>

#include "swing/exact/rational.hpp"

namespace swing {

// Dense univariate polynomial over Q, coefficient i multiplies x^i.
// No trailing zero coefficients; the zero polynomial has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coefficients);
  UPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  UPoly(long constant) : UPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static UPoly x();
  // x - root
  static UPoly linear_factor(const Rational& root);

  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }
  bool is_constant() const { return coefficients_.size() <= 1; }
  Rational coefficient(int i) const;
  Rational lead() const { return is_zero() ? Rational(0) : coefficients_.back(); }
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  Rational operator()(const Rational& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  // p(x + offset)
  UPoly shifted(const Rational& offset) const;
  // x^n p(1/x), requires n >= degree.
  UPoly reversed(int n) const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Rational& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coefficients_ == b.coefficients_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rational> coefficients_;
};

struct UPolyDivision {
  UPoly quotient;
  UPoly remainder;
};
UPolyDivision divmod(const UPoly& a, const UPoly& b);
// Exact division; throws std::logic_error if b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
// Monic gcd (zero when both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
// Inverse of a modulo m; throws DomainError when gcd(a, m) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);
UPoly power(const UPoly& base, int exponent);

// Product of the distinct monic irreducible factors.
UPoly square_free_part(const UPoly& p);

// Distinct rational roots in increasing order.
std::vector<Rational> rational_roots(const UPoly& p);

// Multiplicity of the root `root` in p (0 if not a root).
int root_multiplicity(const UPoly& p, const Rational& root);

// Splits a square-free `factor` into coprime pieces on which every root has the
// same multiplicity in `host`. Pieces with multiplicity zero are included.
std::vector<std::pair<UPoly, int>> split_by_multiplicity(const UPoly& factor, const UPoly& host);

std::string to_string(const UPoly& p, const std::string& variable = "x");

}  // namespace swing
