#include "swing/fuchsian/ode.hpp"

#include <functional>

#include "swing/error.hpp"
#include "swing/fuchsian/frobenius.hpp"

namespace swing {

namespace {

// Degree of the numerator minus degree of the denominator; very negative for 0.
int degree_gap(const RationalFunction& f) {
  if (f.is_zero()) return -1000000;
  return f.numerator().degree() - f.denominator().degree();
}

UPoly reduce(const UPoly& a, const UPoly& modulus) { return divmod(a, modulus).remainder; }

Rational constant_mod(const UPoly& value, const UPoly& factor, const char* what) {
  const UPoly r = reduce(value, factor);
  if (r.degree() > 0)
    throw NotRepresentable(std::string(what) + " differs between the conjugate roots of " + to_string(factor) +
                           "; exponents would leave Q(sqrt d)");
  return r.coefficient(0);
}

SingularPointData point_data(const SingularLocation& location, const Rational& p0, const Rational& q0) {
  SingularPointData data;
  data.location = location;
  data.p_residue = p0;
  data.q_leading = q0;
  data.exponents = indicial_roots(p0, q0);
  return data;
}

// Log flag at a point where the full coefficient expansion is available.
LogFlag log_flag_from_series(const SingularPointData& data, const std::function<SeriesODE(int)>& expand) {
  const ExactScalar diff = data.difference();
  if (!diff.is_integer()) return LogFlag::kNoLog;
  const long gap = diff.rational_part().get_num().get_si();
  if (gap == 0) return LogFlag::kLog;
  const int terms = static_cast<int>(gap) + 1;
  return frobenius_basis(expand(terms + 1), terms).log_flag;
}

SingularPointData data_from_series(const SingularLocation& location, const std::function<SeriesODE(int)>& expand) {
  const SeriesODE head = expand(1);
  SingularPointData data = point_data(location, head.p.coefficient(-1), head.q.coefficient(-2));
  data.log_flag = log_flag_from_series(data, expand);
  return data;
}

}  // namespace

FuchsianODE FuchsianODE::checked(RationalFunction p, RationalFunction q) {
  FuchsianODE ode(std::move(p), std::move(q));
  if (!ode.is_fuchsian()) throw DomainError("equation is not Fuchsian");
  return ode;
}

bool FuchsianODE::is_fuchsian() const {
  const UPoly& dp = p_.denominator();
  const UPoly& dq = q_.denominator();
  if (square_free_part(dp) != dp.monic()) return false;
  const UPoly sq = square_free_part(dq);
  if (!divmod(sq * sq, dq).remainder.is_zero()) return false;
  return degree_gap(p_) <= -1 && degree_gap(q_) <= -2;
}

FuchsianODE FuchsianODE::at_infinity() const {
  const RationalFunction w(UPoly::x());
  const RationalFunction w2 = w * w;
  RationalFunction big_p = RationalFunction(2) / w - p_.at_inverse() / w2;
  RationalFunction big_q = q_.at_inverse() / (w2 * w2);
  return FuchsianODE(std::move(big_p), std::move(big_q));
}

SeriesODE series_at(const FuchsianODE& ode, const Rational& point, int order) {
  return {ode.p().laurent_at(point, order), ode.q().laurent_at(point, order)};
}

SeriesODE series_at_infinity(const FuchsianODE& ode, int order) {
  return series_at(ode.at_infinity(), Rational(0), order);
}

std::string to_string(LogFlag flag) {
  switch (flag) {
    case LogFlag::kNoLog:
      return "no-log";
    case LogFlag::kLog:
      return "log";
    case LogFlag::kUndetermined:
      return "undetermined";
  }
  return "unknown";
}

std::string to_string(const SingularLocation& location) {
  switch (location.kind) {
    case SingularLocation::Kind::kRational:
      return to_string(location.point);
    case SingularLocation::Kind::kFactor:
      return "roots of " + to_string(location.factor, "z");
    case SingularLocation::Kind::kInfinity:
      return "infinity";
  }
  return "unknown";
}

std::array<ExactScalar, 2> indicial_roots(const Rational& p0, const Rational& q0) {
  const Rational b = 1 - p0;
  const Rational disc = b * b - 4 * q0;
  const ExactScalar half_root = ExactScalar::sqrt_of(disc) * Rational(1, 2);
  return {(-half_root) + Rational(b / 2), half_root + Rational(b / 2)};
}

SingularPointData infinity_data(const FuchsianODE& ode) {
  const FuchsianODE inverted = ode.at_infinity();
  return data_from_series(SingularLocation::infinity(), [&](int order) { return series_at(inverted, Rational(0), order); });
}

std::vector<SingularPointData> singular_exponents(const FuchsianODE& ode) {
  if (!ode.is_fuchsian()) throw DomainError("equation is not Fuchsian");
  const RationalFunction& p = ode.p();
  const RationalFunction& q = ode.q();
  const UPoly& dp = p.denominator();
  const UPoly& dq = q.denominator();
  const UPoly poles = square_free_part(dp * dq);

  std::vector<SingularPointData> out;
  UPoly rest = poles;
  for (const Rational& z : rational_roots(poles)) {
    out.push_back(data_from_series(SingularLocation::at(z), [&](int order) { return series_at(ode, z, order); }));
    rest = exact_quotient(rest, UPoly::linear_factor(z));
  }

  if (rest.degree() > 0) {
    for (const auto& [piece, mult_p] : split_by_multiplicity(rest, dp)) {
      for (const auto& [factor, mult_q] : split_by_multiplicity(piece, dq)) {
        Rational p0(0), q0(0);
        if (mult_p == 1) p0 = constant_mod(p.numerator() * inverse_mod(reduce(dp.derivative(), factor), factor), factor, "residue of p");
        if (mult_q == 2) {
          const UPoly second = dq.derivative().derivative();
          q0 = constant_mod(q.numerator() * UPoly(2) * inverse_mod(reduce(second, factor), factor), factor, "leading coefficient of q");
        }
        SingularPointData data = point_data(SingularLocation::roots_of(factor.monic()), p0, q0);
        const ExactScalar diff = data.difference();
        if (diff.is_zero()) {
          data.log_flag = LogFlag::kLog;
        } else if (diff.is_integer()) {
          data.log_flag = LogFlag::kUndetermined;
        }
        out.push_back(std::move(data));
      }
    }
  }

  const FuchsianODE inverted = ode.at_infinity();
  const SeriesODE head = series_at(inverted, Rational(0), 1);
  if (head.p.lowest_exponent() < 0 || head.q.lowest_exponent() < 0) out.push_back(infinity_data(ode));
  return out;
}

}  // namespace swing
