#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "swing/exact/rational.hpp"

namespace swing {

// Element r + c*sqrt(d) of a single quadratic field Q(sqrt d).
//
// d is a square-free integer different from 0 and 1; a negative d encodes an
// imaginary surd (exponent pairs of Fuchsian equations can be complex).
// A zero surd coefficient always normalizes to the plain rational r.
// Only the operations the verdict pipeline needs are supported; mixing two
// different radicands is rejected.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(const Rational& value) : rational_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(long value) : rational_(value) {}             // NOLINT(google-explicit-constructor)

  // r + c*sqrt(d); d need not be square-free, it is normalized here.
  static ExactScalar surd(const Rational& r, const Rational& c, const Integer& d);
  // Principal square root of a rational (imaginary for negative input).
  static ExactScalar sqrt_of(const Rational& value);

  const Rational& rational_part() const { return rational_; }
  const Rational& surd_coefficient() const { return coefficient_; }
  const Integer& radicand() const { return radicand_; }

  bool is_rational() const { return coefficient_ == 0; }
  bool is_real() const { return is_rational() || radicand_ > 0; }
  bool is_integer() const { return is_rational() && swing::is_integer(rational_); }
  bool is_odd_integer() const;
  bool is_zero() const { return is_rational() && rational_ == 0; }

  ExactScalar operator-() const;
  ExactScalar operator+(const Rational& rhs) const;
  ExactScalar operator-(const Rational& rhs) const { return *this + Rational(-rhs); }
  ExactScalar operator*(const Rational& rhs) const;

  // Sum/difference/product inside one field; nullopt when radicands differ.
  std::optional<ExactScalar> try_add(const ExactScalar& rhs) const;
  std::optional<ExactScalar> try_sub(const ExactScalar& rhs) const { return try_add(-rhs); }
  std::optional<ExactScalar> try_mul(const ExactScalar& rhs) const;
  // Throwing variants (NotRepresentable).
  ExactScalar add(const ExactScalar& rhs) const;
  ExactScalar sub(const ExactScalar& rhs) const { return add(-rhs); }
  ExactScalar mul(const ExactScalar& rhs) const;
  ExactScalar square() const;
  // 1/x; exact in Q(sqrt d) via the conjugate.
  ExactScalar inverse() const;

  // Sign of a real element: -1, 0, +1. Throws DomainError for imaginary values.
  int sign() const;

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.rational_ == b.rational_ && a.coefficient_ == b.coefficient_ && (a.is_rational() || a.radicand_ == b.radicand_);
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  // Floating approximation (real part only for imaginary values).
  double to_double() const;

 private:
  Rational rational_{0};
  Rational coefficient_{0};
  Integer radicand_{0};
};

// Three-way comparison of two real scalars (same field or rational).
int compare(const ExactScalar& a, const ExactScalar& b);

// "p/q", "(p/q)*sqrt(d)" or "p/q+(c)*sqrt(d)".
std::string to_string(const ExactScalar& value);
ExactScalar parse_exact_scalar(std::string_view text);

}  // namespace swing
