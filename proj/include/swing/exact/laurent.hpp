#pragma once

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "swing/error.hpp"
#include "swing/exact/ring.hpp"

namespace swing {

// Truncated Laurent series sum c_n t^n over an exact coefficient ring.
//
// Coefficients are known exactly for every exponent below order(); beyond it
// nothing is claimed. An exact series (order() == kExact) is a finite Laurent
// polynomial. Stored coefficients have no leading or trailing zeros; exponents
// outside the stored range but below order() are zero.
template <class R>
class LaurentSeries {
 public:
  using Traits = RingTraits<R>;
  static constexpr int kExact = INT_MAX / 4;

  LaurentSeries() = default;  // exact zero
  LaurentSeries(int start, std::vector<R> coefficients, int order)
      : start_(start), coefficients_(std::move(coefficients)), order_(std::min(order, kExact)) {
    normalize();
  }

  static LaurentSeries monomial(const R& coefficient, int exponent, int order = kExact) {
    return LaurentSeries(exponent, std::vector<R>{coefficient}, order);
  }
  // Zero up to (but excluding) t^order.
  static LaurentSeries zero_to(int order) { return LaurentSeries(order, {}, order); }

  int order() const { return order_; }
  bool is_exact() const { return order_ >= kExact; }
  // Identically zero as far as it is certified.
  bool is_zero() const { return coefficients_.empty(); }
  std::optional<int> valuation() const {
    if (is_zero()) return std::nullopt;
    return start_;
  }
  // Valuation, or the truncation order for a series certified zero.
  int lowest_exponent() const { return is_zero() ? order_ : start_; }
  int start() const { return start_; }
  int last_exponent() const { return start_ + static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<R>& coefficients() const { return coefficients_; }
  const R& leading_coefficient() const { return coefficients_.front(); }

  R coefficient(int exponent) const {
    if (exponent >= order_)
      throw TruncationError("coefficient of t^" + std::to_string(exponent) + " is beyond the certified order " + std::to_string(order_));
    if (is_zero() || exponent < start_ || exponent > last_exponent()) return Traits::zero();
    return coefficients_[static_cast<std::size_t>(exponent - start_)];
  }
  // Coefficient that is known to lie in the stored window (no checks).
  const R& stored(int exponent) const { return coefficients_[static_cast<std::size_t>(exponent - start_)]; }
  bool stores(int exponent) const { return !is_zero() && exponent >= start_ && exponent <= last_exponent(); }

 private:
  void normalize() {
    if (order_ < kExact && !coefficients_.empty()) {
      const long keep = static_cast<long>(order_) - start_;
      if (keep <= 0) {
        coefficients_.clear();
      } else if (static_cast<long>(coefficients_.size()) > keep) {
        coefficients_.resize(static_cast<std::size_t>(keep));
      }
    }
    std::size_t lead = 0;
    while (lead < coefficients_.size() && Traits::is_zero(coefficients_[lead])) ++lead;
    if (lead == coefficients_.size()) {
      coefficients_.clear();
      start_ = order_;
      return;
    }
    if (lead > 0) {
      coefficients_.erase(coefficients_.begin(), coefficients_.begin() + static_cast<long>(lead));
      start_ += static_cast<int>(lead);
    }
    while (Traits::is_zero(coefficients_.back())) coefficients_.pop_back();
  }

  int start_ = kExact;
  std::vector<R> coefficients_;
  int order_ = kExact;
};

namespace laurent_detail {
inline int shifted(int order, long delta) {
  if (order >= LaurentSeries<Rational>::kExact) return order;
  const long value = static_cast<long>(order) + delta;
  return static_cast<int>(std::min<long>(value, LaurentSeries<Rational>::kExact - 1));
}
}  // namespace laurent_detail

template <class R>
LaurentSeries<R> operator-(const LaurentSeries<R>& a) {
  std::vector<R> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) coeffs.push_back(-c);
  return LaurentSeries<R>(a.lowest_exponent(), std::move(coeffs), a.order());
}

template <class R, class Combine>
LaurentSeries<R> combine_series(const LaurentSeries<R>& a, const LaurentSeries<R>& b, Combine combine) {
  const int order = std::min(a.order(), b.order());
  if (a.is_zero() && b.is_zero()) return LaurentSeries<R>::zero_to(order);
  int lo = std::min(a.is_zero() ? b.start() : a.start(), b.is_zero() ? a.start() : b.start());
  int hi = std::max(a.is_zero() ? lo : a.last_exponent(), b.is_zero() ? lo : b.last_exponent());
  if (order < LaurentSeries<R>::kExact) hi = std::min(hi, order - 1);
  std::vector<R> coeffs;
  if (hi >= lo) coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    const bool in_a = a.stores(n);
    const bool in_b = b.stores(n);
    if (in_a && in_b) {
      coeffs.push_back(combine(a.stored(n), b.stored(n)));
    } else if (in_a) {
      coeffs.push_back(combine(a.stored(n), RingTraits<R>::zero()));
    } else if (in_b) {
      coeffs.push_back(combine(RingTraits<R>::zero(), b.stored(n)));
    } else {
      coeffs.push_back(RingTraits<R>::zero());
    }
  }
  return LaurentSeries<R>(lo, std::move(coeffs), order);
}

template <class R>
LaurentSeries<R> operator+(const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  return combine_series(a, b, [](const R& x, const R& y) { return R(x + y); });
}

template <class R>
LaurentSeries<R> operator-(const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  return combine_series(a, b, [](const R& x, const R& y) { return R(x - y); });
}

template <class R>
LaurentSeries<R> scale(const LaurentSeries<R>& a, const R& factor) {
  if (RingTraits<R>::is_zero(factor)) return a.is_exact() ? LaurentSeries<R>() : LaurentSeries<R>::zero_to(a.order());
  std::vector<R> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) coeffs.push_back(c * factor);
  return LaurentSeries<R>(a.lowest_exponent(), std::move(coeffs), a.order());
}

template <class R>
  requires(!std::is_same_v<R, Rational>)
LaurentSeries<R> scale(const LaurentSeries<R>& a, const Rational& factor) {
  if (factor == 0) return a.is_exact() ? LaurentSeries<R>() : LaurentSeries<R>::zero_to(a.order());
  std::vector<R> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) coeffs.push_back(c * factor);
  return LaurentSeries<R>(a.lowest_exponent(), std::move(coeffs), a.order());
}

// Multiplication by t^shift.
template <class R>
LaurentSeries<R> shift(const LaurentSeries<R>& a, int amount) {
  return LaurentSeries<R>(a.lowest_exponent() + amount, a.coefficients(), laurent_detail::shifted(a.order(), amount));
}

// Drops everything from t^order on.
template <class R>
LaurentSeries<R> truncate(const LaurentSeries<R>& a, int order) {
  if (order >= a.order()) return a;
  return LaurentSeries<R>(a.lowest_exponent(), a.coefficients(), order);
}

// Certified order of a product: min(o_a + v_b, o_b + v_a).
template <class R>
int product_order(const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  return std::min(laurent_detail::shifted(a.order(), b.lowest_exponent()), laurent_detail::shifted(b.order(), a.lowest_exponent()));
}

// Product with the maximal certifiable order; throws TruncationError when that
// order falls below `min_order`. `cap` optionally limits the computed order.
template <class R>
LaurentSeries<R> mul(const LaurentSeries<R>& a, const LaurentSeries<R>& b, std::optional<int> min_order = std::nullopt,
                     std::optional<int> cap = std::nullopt) {
  using Series = LaurentSeries<R>;
  if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return Series();
  int order = product_order(a, b);
  if (cap && *cap < order) order = *cap;
  if (min_order && order < *min_order)
    throw TruncationError("product certified only below t^" + std::to_string(order) + ", requested t^" + std::to_string(*min_order));
  if (a.is_zero() || b.is_zero()) return Series::zero_to(order);
  const int lo = a.start() + b.start();
  int hi = a.last_exponent() + b.last_exponent();
  if (order < Series::kExact) hi = std::min(hi, order - 1);
  std::vector<R> coeffs;
  if (hi >= lo) coeffs.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (int n = lo; n <= hi; ++n) {
    typename RingTraits<R>::Accumulator acc;
    const int i_lo = std::max(a.start(), n - b.last_exponent());
    const int i_hi = std::min(a.last_exponent(), n - b.start());
    for (int i = i_lo; i <= i_hi; ++i) acc.add_product(a.stored(i), b.stored(n - i));
    coeffs.push_back(acc.result());
  }
  return Series(lo, std::move(coeffs), order);
}

template <class R>
LaurentSeries<R> operator*(const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  return mul(a, b);
}

// Multiplicative inverse. The leading coefficient must be a unit of the ring.
// An exact input with more than one term has an infinite inverse, so `cap`
// (absolute order) is then mandatory.
template <class R>
LaurentSeries<R> invert(const LaurentSeries<R>& a, std::optional<int> cap = std::nullopt) {
  using Series = LaurentSeries<R>;
  if (a.is_zero()) throw DomainError("inverse of a series that is zero to its certified order");
  const auto lead_inverse = RingTraits<R>::inverse(a.leading_coefficient());
  if (!lead_inverse) throw DomainError("leading coefficient is not invertible in the coefficient ring");
  const int v = a.start();
  if (a.is_exact() && a.coefficients().size() == 1) return Series::monomial(*lead_inverse, -v);
  long relative;
  if (a.is_exact()) {
    if (!cap) throw TruncationError("inverse of a multi-term exact series needs an explicit order cap");
    relative = static_cast<long>(*cap) + v;
  } else {
    relative = static_cast<long>(a.order()) - v;
    if (cap) relative = std::min(relative, static_cast<long>(*cap) + v);
  }
  if (relative <= 0) return Series::zero_to(static_cast<int>(-v + relative));
  std::vector<R> out;
  out.reserve(static_cast<std::size_t>(relative));
  out.push_back(*lead_inverse);
  for (long n = 1; n < relative; ++n) {
    typename RingTraits<R>::Accumulator acc;
    const long upto = std::min<long>(n, a.last_exponent() - v);
    for (long i = 1; i <= upto; ++i) acc.add_product(a.stored(v + static_cast<int>(i)), out[static_cast<std::size_t>(n - i)]);
    R sum = acc.result();
    out.push_back(-(sum * *lead_inverse));
  }
  return Series(-v, std::move(out), static_cast<int>(-v + relative));
}

template <class R>
LaurentSeries<R> derivative(const LaurentSeries<R>& a) {
  if (a.is_zero()) return a.is_exact() ? a : LaurentSeries<R>::zero_to(a.order() - 1);
  std::vector<R> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (int n = a.start(); n <= a.last_exponent(); ++n) coeffs.push_back(a.stored(n) * Rational(n));
  return LaurentSeries<R>(a.start() - 1, std::move(coeffs), laurent_detail::shifted(a.order(), -1));
}

template <class R>
struct Antiderivative {
  LaurentSeries<R> series;
  R residue;
};

// Termwise integration; the t^-1 coefficient is split off as the residue
// (a logarithm would be needed for it). Zero constant of integration.
template <class R>
Antiderivative<R> integrate(const LaurentSeries<R>& a) {
  if (a.order() <= -1) throw TruncationError("residue is beyond the certified order " + std::to_string(a.order()));
  R residue = a.coefficient(-1);
  const int order = laurent_detail::shifted(a.order(), 1);
  if (a.is_zero()) return {a.is_exact() ? a : LaurentSeries<R>::zero_to(order), residue};
  std::vector<R> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (int n = a.start(); n <= a.last_exponent(); ++n) {
    if (n == -1) {
      coeffs.push_back(RingTraits<R>::zero());
    } else {
      coeffs.push_back(a.stored(n) * (Rational(1) / Rational(n + 1)));
    }
  }
  return {LaurentSeries<R>(a.start() + 1, std::move(coeffs), order), residue};
}

// Coefficient-wise ring change (e.g. rational series into polynomial ring).
template <class To, class From>
LaurentSeries<To> convert(const LaurentSeries<From>& a) {
  std::vector<To> coeffs;
  coeffs.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) coeffs.push_back(To(c));
  return LaurentSeries<To>(a.lowest_exponent(), std::move(coeffs), a.order());
}

// Agreement on all exponents certified in both series.
template <class R>
bool agree(const LaurentSeries<R>& a, const LaurentSeries<R>& b) {
  const int order = std::min(a.order(), b.order());
  const int lo = std::min(a.lowest_exponent(), b.lowest_exponent());
  int hi = std::max(a.is_zero() ? lo : a.last_exponent(), b.is_zero() ? lo : b.last_exponent());
  hi = std::min(hi, order - 1);
  for (int n = lo; n <= hi; ++n)
    if (!(a.coefficient(n) == b.coefficient(n))) return false;
  return true;
}

}  // namespace swing
