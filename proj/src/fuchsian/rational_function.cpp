#include "swing/fuchsian/rational_function.hpp"

#include "swing/error.hpp"

namespace swing {

RationalFunction::RationalFunction(UPoly numerator, UPoly denominator) {
  if (denominator.is_zero()) throw DomainError("rational function with zero denominator");
  if (numerator.is_zero()) {
    num_ = UPoly();
    den_ = UPoly(Rational(1));
    return;
  }
  const UPoly g = gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = exact_quotient(numerator, g);
    denominator = exact_quotient(denominator, g);
  }
  const Rational lead = denominator.lead();
  num_ = numerator * (Rational(1) / lead);
  den_ = denominator * (Rational(1) / lead);
}

Rational RationalFunction::operator()(const Rational& z) const {
  const Rational d = den_(z);
  if (d == 0) throw DomainError("evaluation at a pole");
  return num_(z) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction RationalFunction::shifted(const Rational& z0) const {
  return RationalFunction(num_.shifted(z0), den_.shifted(z0));
}

RationalFunction RationalFunction::at_inverse() const {
  if (is_zero()) return *this;
  const int n = num_.degree();
  const int d = den_.degree();
  UPoly num = num_.reversed(n);
  UPoly den = den_.reversed(d);
  // N(1/w)/D(1/w) = w^{d-n} rev(N)/rev(D)
  if (d >= n) {
    num = num * power(UPoly::x(), d - n);
  } else {
    den = den * power(UPoly::x(), n - d);
  }
  return RationalFunction(num, den);
}

namespace {

// p = w^v * rest with rest(0) != 0
int strip_zero_roots(const UPoly& p, UPoly& rest) {
  int v = 0;
  while (p.coefficient(v) == 0) ++v;
  std::vector<Rational> coeffs(p.coefficients().begin() + v, p.coefficients().end());
  rest = UPoly(std::move(coeffs));
  return v;
}

LaurentSeries<Rational> as_series(const UPoly& p) {
  return LaurentSeries<Rational>(0, p.coefficients(), LaurentSeries<Rational>::kExact);
}

}  // namespace

LaurentSeries<Rational> RationalFunction::laurent_at_zero(int order) const {
  if (is_zero()) return LaurentSeries<Rational>::zero_to(order);
  UPoly num_rest, den_rest;
  const int vn = strip_zero_roots(num_, num_rest);
  const int vd = strip_zero_roots(den_, den_rest);
  const int v = vn - vd;
  // relative precision needed: order - v
  const int relative = order - v;
  if (relative <= 0) return LaurentSeries<Rational>::zero_to(order);
  auto inv = invert(as_series(den_rest), relative);
  auto quotient = mul(as_series(num_rest), inv, std::nullopt, relative);
  return shift(quotient, v);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  const UPoly g = gcd(a.den_, b.den_);
  const UPoly a_cof = exact_quotient(b.den_, g);
  const UPoly b_cof = exact_quotient(a.den_, g);
  return RationalFunction(a.num_ * a_cof + b.num_ * b_cof, a.den_ * a_cof);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f, const std::string& variable) {
  if (f.is_polynomial()) return to_string(f.numerator(), variable);
  return "(" + to_string(f.numerator(), variable) + ")/(" + to_string(f.denominator(), variable) + ")";
}

}  // namespace swing
