#pragma once

#include <string>

#include "swing/exact/laurent.hpp"
#include "swing/exact/upoly.hpp"

namespace swing {

// Element of Q(z) in lowest terms with a monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(UPoly numerator, UPoly denominator);
  RationalFunction(const UPoly& polynomial) : RationalFunction(polynomial, UPoly(Rational(1))) {}  // NOLINT
  RationalFunction(const Rational& constant) : RationalFunction(UPoly(constant)) {}                // NOLINT
  RationalFunction(long constant) : RationalFunction(Rational(constant)) {}                        // NOLINT

  const UPoly& numerator() const { return num_; }
  const UPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  // Throws DomainError at a pole.
  Rational operator()(const Rational& z) const;
  RationalFunction derivative() const;
  // f(z0 + w) as a function of w.
  RationalFunction shifted(const Rational& z0) const;
  // f(1/w) as a function of w.
  RationalFunction at_inverse() const;
  // Laurent expansion at w = 0, certified below w^order.
  LaurentSeries<Rational> laurent_at_zero(int order) const;
  LaurentSeries<Rational> laurent_at(const Rational& z0, int order) const { return shifted(z0).laurent_at_zero(order); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

 private:
  UPoly num_;
  UPoly den_;
};

std::string to_string(const RationalFunction& f, const std::string& variable = "z");

}  // namespace swing
