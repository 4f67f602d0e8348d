#pragma once

#include "swing/fuchsian/ode.hpp"

namespace swing {

// y = t^exponent * series(t) + log_coefficient * y_first * log(t).
struct FrobeniusSolution {
  Rational exponent;
  LaurentSeries<Rational> series;
  Rational log_coefficient;
};

struct FrobeniusBasis {
  Rational exponent_high;
  Rational exponent_low;
  FrobeniusSolution first;   // larger exponent, always a pure series
  FrobeniusSolution second;
  LogFlag log_flag = LogFlag::kNoLog;
  // Right-hand side of the recurrence at the resonant index (zero when the
  // difference is not an integer).
  Rational obstruction;
};

// Frobenius solutions at t = 0 with `terms` certified coefficients each.
// Throws DomainError if t = 0 is not regular singular or the exponents are not
// rational, TruncationError if the expansions are too short.
FrobeniusBasis frobenius_basis(const SeriesODE& ode, int terms);
FrobeniusBasis frobenius_basis(const FuchsianODE& ode, const Rational& point, int terms);
FrobeniusBasis frobenius_basis_at_infinity(const FuchsianODE& ode, int terms);

}  // namespace swing
