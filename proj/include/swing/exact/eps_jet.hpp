#pragma once

#include <vector>

#include "swing/exact/laurent.hpp"

namespace swing {

// Truncated polynomial in a formal parameter eps up to eps^K whose
// coefficients are Laurent series in t. Products keep the grading: the eps^j
// coefficient of a product only reads eps^i, i <= j, of the factors.
template <class R>
class EpsJet {
 public:
  using Series = LaurentSeries<R>;

  explicit EpsJet(int max_order) : terms_(static_cast<std::size_t>(max_order + 1)) {}
  EpsJet(std::vector<Series> terms) : terms_(std::move(terms)) {}  // NOLINT(google-explicit-constructor)

  int max_order() const { return static_cast<int>(terms_.size()) - 1; }
  const Series& operator[](int j) const { return terms_[static_cast<std::size_t>(j)]; }
  Series& operator[](int j) { return terms_[static_cast<std::size_t>(j)]; }
  const std::vector<Series>& terms() const { return terms_; }

  friend EpsJet operator+(const EpsJet& a, const EpsJet& b) {
    EpsJet out(std::min(a.max_order(), b.max_order()));
    for (int j = 0; j <= out.max_order(); ++j) out[j] = a[j] + b[j];
    return out;
  }
  friend EpsJet operator-(const EpsJet& a, const EpsJet& b) {
    EpsJet out(std::min(a.max_order(), b.max_order()));
    for (int j = 0; j <= out.max_order(); ++j) out[j] = a[j] - b[j];
    return out;
  }
  friend EpsJet operator*(const EpsJet& a, const EpsJet& b) {
    EpsJet out(std::min(a.max_order(), b.max_order()));
    for (int j = 0; j <= out.max_order(); ++j) {
      Series sum;
      for (int i = 0; i <= j; ++i) {
        if ((a[i].is_zero() && a[i].is_exact()) || (b[j - i].is_zero() && b[j - i].is_exact())) continue;
        sum = sum + a[i] * b[j - i];
      }
      out[j] = sum;
    }
    return out;
  }
  EpsJet scaled(const Rational& factor) const {
    EpsJet out(max_order());
    for (int j = 0; j <= max_order(); ++j) out[j] = scale(terms_[static_cast<std::size_t>(j)], RingTraits<R>::from_rational(factor));
    return out;
  }

 private:
  std::vector<Series> terms_;
};

// sum_n taylor[n] * arg^n truncated at eps^K, for an argument whose eps^0
// coefficient is exactly zero (so arg^n vanishes for n > K).
template <class R>
EpsJet<R> compose_analytic(const std::vector<Rational>& taylor, const EpsJet<R>& arg) {
  if (!(arg[0].is_zero() && arg[0].is_exact())) throw DomainError("compose_analytic needs an argument with zero eps^0 coefficient");
  const int order = arg.max_order();
  EpsJet<R> result(order);
  EpsJet<R> power(order);
  power[0] = LaurentSeries<R>::monomial(RingTraits<R>::one(), 0);
  for (int n = 0; n <= order && n < static_cast<int>(taylor.size()); ++n) {
    if (n > 0) power = power * arg;
    if (taylor[static_cast<std::size_t>(n)] != 0) result = result + power.scaled(taylor[static_cast<std::size_t>(n)]);
  }
  return result;
}

// Taylor coefficients of cos and sin at 0 up to x^n.
std::vector<Rational> cosine_taylor(int n);
std::vector<Rational> sine_taylor(int n);

}  // namespace swing
