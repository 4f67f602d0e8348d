#pragma once

#include <array>
#include <string>
#include <vector>

#include "swing/exact/exact_scalar.hpp"
#include "swing/fuchsian/rational_function.hpp"

namespace swing {

// y'' + p(z) y' + q(z) y = 0 with rational coefficients.
class FuchsianODE {
 public:
  FuchsianODE(RationalFunction p, RationalFunction q) : p_(std::move(p)), q_(std::move(q)) {}
  // Constructs and throws DomainError unless every singular point (infinity
  // included) is regular.
  static FuchsianODE checked(RationalFunction p, RationalFunction q);

  const RationalFunction& p() const { return p_; }
  const RationalFunction& q() const { return q_; }
  bool is_fuchsian() const;
  // Coefficients in w = 1/z: y_ww + P y_w + Q y = 0.
  FuchsianODE at_infinity() const;

 private:
  RationalFunction p_;
  RationalFunction q_;
};

// The same equation given by Laurent expansions at a point t = 0.
struct SeriesODE {
  LaurentSeries<Rational> p;
  LaurentSeries<Rational> q;
};

// Expansion of the coefficients at z = point, certified below t^order.
SeriesODE series_at(const FuchsianODE& ode, const Rational& point, int order);
SeriesODE series_at_infinity(const FuchsianODE& ode, int order);

enum class LogFlag { kNoLog, kLog, kUndetermined };
std::string to_string(LogFlag flag);

struct SingularLocation {
  enum class Kind { kRational, kFactor, kInfinity };
  Kind kind = Kind::kInfinity;
  Rational point;  // kRational
  UPoly factor;    // kFactor: a square-free factor without rational roots, monic

  static SingularLocation at(const Rational& z) { return {Kind::kRational, z, UPoly()}; }
  static SingularLocation roots_of(const UPoly& f) { return {Kind::kFactor, Rational(0), f}; }
  static SingularLocation infinity() { return {}; }
  // Number of points the location stands for.
  int weight() const { return kind == Kind::kFactor ? factor.degree() : 1; }
  friend bool operator==(const SingularLocation& a, const SingularLocation& b) {
    return a.kind == b.kind && a.point == b.point && a.factor == b.factor;
  }
};

std::string to_string(const SingularLocation& location);

struct SingularPointData {
  SingularLocation location;
  // Roots of rho(rho-1) + p0 rho + q0, ordered low/high (by the sign of the
  // surd part when they are complex).
  std::array<ExactScalar, 2> exponents;
  LogFlag log_flag = LogFlag::kNoLog;
  Rational p_residue;  // p0: coefficient of t^-1 in p
  Rational q_leading;  // q0: coefficient of t^-2 in q

  // Difference high - low; rational for rational exponents.
  ExactScalar difference() const { return exponents[1].sub(exponents[0]); }
};

// Indicial roots from p0, q0.
std::array<ExactScalar, 2> indicial_roots(const Rational& p0, const Rational& q0);

// Finite singular points (rational points ascending, then factor blocks),
// followed by infinity when it is singular. Throws DomainError for a
// non-Fuchsian equation.
std::vector<SingularPointData> singular_exponents(const FuchsianODE& ode);

// Data at infinity, also when infinity is an ordinary point.
SingularPointData infinity_data(const FuchsianODE& ode);

}  // namespace swing
