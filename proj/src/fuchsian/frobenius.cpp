#include "swing/fuchsian/frobenius.hpp"

#include <stdexcept>

#include "swing/error.hpp"

namespace swing {

namespace {

struct Recurrence {
  // p = sum P[m] t^{m-1}, q = sum Q[m] t^{m-2}
  std::vector<Rational> P;
  std::vector<Rational> Q;

  Rational indicial(const Rational& rho) const { return rho * (rho - 1) + P[0] * rho + Q[0]; }

  // -sum_{m=1}^{n} (P[m](n-m+rho) + Q[m]) a[n-m]
  Rational rhs(int n, const Rational& rho, const std::vector<Rational>& a) const {
    Rational sum(0);
    for (int m = 1; m <= n; ++m) {
      const auto& c = a[static_cast<std::size_t>(n - m)];
      if (c == 0) continue;
      sum += (P[static_cast<std::size_t>(m)] * (n - m + rho) + Q[static_cast<std::size_t>(m)]) * c;
    }
    return -sum;
  }
};

LaurentSeries<Rational> as_series(std::vector<Rational> a) {
  const int terms = static_cast<int>(a.size());
  return LaurentSeries<Rational>(0, std::move(a), terms);
}

}  // namespace

FrobeniusBasis frobenius_basis(const SeriesODE& ode, int terms) {
  if (terms < 1) throw std::invalid_argument("frobenius_basis needs at least one term");
  if (ode.p.lowest_exponent() < -1 || ode.q.lowest_exponent() < -2)
    throw DomainError("t = 0 is an irregular singular point");
  if (ode.p.order() < terms - 1 || ode.q.order() < terms - 2)
    throw TruncationError("coefficient expansions too short for " + std::to_string(terms) + " Frobenius terms");

  Recurrence rec;
  for (int m = 0; m < terms; ++m) {
    rec.P.push_back(ode.p.coefficient(m - 1));
    rec.Q.push_back(m - 2 < ode.q.order() ? ode.q.coefficient(m - 2) : Rational(0));
  }
  const Rational b = 1 - rec.P[0];
  Rational s;
  if (!exact_sqrt(Rational(b * b - 4 * rec.Q[0]), s)) throw DomainError("exponents are not rational at this point");

  FrobeniusBasis basis;
  basis.exponent_high = (b + s) / 2;
  basis.exponent_low = (b - s) / 2;
  const Rational& hi = basis.exponent_high;
  const Rational& lo = basis.exponent_low;

  std::vector<Rational> a{Rational(1)};
  for (int n = 1; n < terms; ++n) a.push_back(rec.rhs(n, hi, a) / rec.indicial(n + hi));

  std::vector<Rational> bcoef;
  Rational log_coefficient(0);
  if (!is_integer(s)) {
    bcoef.push_back(1);
    for (int n = 1; n < terms; ++n) bcoef.push_back(rec.rhs(n, lo, bcoef) / rec.indicial(n + lo));
  } else {
    // L[y1 log t] = log t L[y1] + t^{hi-2} sum h_n t^n
    auto h = [&](int n) {
      Rational value = a[static_cast<std::size_t>(n)] * (2 * (n + hi) - 1);
      for (int m = 0; m <= n; ++m) value += rec.P[static_cast<std::size_t>(m)] * a[static_cast<std::size_t>(n - m)];
      return value;
    };
    const int gap = static_cast<int>(s.get_num().get_si());
    if (gap == 0) {
      basis.log_flag = LogFlag::kLog;
      log_coefficient = 1;
      bcoef.push_back(0);
    } else {
      bcoef.push_back(1);
    }
    for (int n = 1; n < terms; ++n) {
      if (gap > 0 && n == gap) {
        basis.obstruction = rec.rhs(n, lo, bcoef);
        if (basis.obstruction != 0) {
          basis.log_flag = LogFlag::kLog;
          log_coefficient = basis.obstruction / gap;
        }
        bcoef.push_back(0);
        continue;
      }
      Rational value = rec.rhs(n, lo, bcoef);
      if (log_coefficient != 0 && n >= gap) value -= log_coefficient * h(n - gap);
      bcoef.push_back(value / rec.indicial(n + lo));
    }
    if (gap > 0 && terms <= gap) basis.log_flag = LogFlag::kUndetermined;
  }

  basis.first = {hi, as_series(std::move(a)), Rational(0)};
  basis.second = {lo, as_series(std::move(bcoef)), log_coefficient};
  return basis;
}

FrobeniusBasis frobenius_basis(const FuchsianODE& ode, const Rational& point, int terms) {
  return frobenius_basis(series_at(ode, point, terms), terms);
}

FrobeniusBasis frobenius_basis_at_infinity(const FuchsianODE& ode, int terms) {
  return frobenius_basis(series_at_infinity(ode, terms), terms);
}

}  // namespace swing
