#pragma once

#include <optional>

#include "swing/exact/poly.hpp"
#include "swing/exact/rational.hpp"

namespace swing {

// Coefficient ring interface for LaurentSeries. Rings must have an exact zero
// test; `inverse` returns nullopt for non-units.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::optional<Rational> inverse(const Rational& x) {
    if (x == 0) return std::nullopt;
    return Rational(1) / x;
  }
  static Rational from_rational(const Rational& x) { return x; }

  class Accumulator {
   public:
    void add_product(const Rational& a, const Rational& b) { sum_ += a * b; }
    void add(const Rational& a) { sum_ += a; }
    Rational result() { return sum_; }

   private:
    Rational sum_{0};
  };
};

template <>
struct RingTraits<Poly> {
  static Poly zero() { return Poly(); }
  static Poly one() { return Poly(Rational(1)); }
  static bool is_zero(const Poly& x) { return x.is_zero(); }
  static std::optional<Poly> inverse(const Poly& x) {
    if (x.is_zero() || !x.is_constant()) return std::nullopt;
    return Poly(Rational(1) / x.constant_term());
  }
  static Poly from_rational(const Rational& x) { return Poly(x); }

  class Accumulator {
   public:
    void add_product(const Poly& a, const Poly& b) {
      if (a.is_zero() || b.is_zero()) return;
      if (a.is_constant() && b.is_constant()) {
        constant_ += a.constant_term() * b.constant_term();
      } else if (a.is_constant()) {
        inner_.add(b * a.constant_term());
      } else if (b.is_constant()) {
        inner_.add(a * b.constant_term());
      } else {
        inner_.add_product(a, b);
      }
    }
    void add(const Poly& a) { inner_.add(a); }
    Poly result() {
      inner_.add(Poly(constant_));
      return inner_.result();
    }

   private:
    PolyAccumulator inner_;
    Rational constant_{0};
  };
};

}  // namespace swing
