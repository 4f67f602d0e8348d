#include "swing/exact/exact_scalar.hpp"

#include <cctype>
#include <cmath>

#include "swing/error.hpp"

namespace swing {

ExactScalar ExactScalar::surd(const Rational& r, const Rational& c, const Integer& d) {
  ExactScalar out(r);
  if (c == 0 || d == 0) return out;
  const SquareFreeSplit split = square_free_split(d);
  Rational coef = c * Rational(split.outer);
  if (split.core == 1) {
    out.rational_ += coef;
    return out;
  }
  out.coefficient_ = coef;
  out.radicand_ = split.core;
  return out;
}

ExactScalar ExactScalar::sqrt_of(const Rational& value) {
  // sqrt(p/q) = sqrt(p*q)/q
  const Integer pq = value.get_num() * value.get_den();
  return surd(Rational(0), Rational(1, 1) / Rational(value.get_den()), pq);
}

bool ExactScalar::is_odd_integer() const {
  if (!is_integer()) return false;
  return mpz_odd_p(rational_.get_num_mpz_t()) != 0;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.rational_ = -out.rational_;
  out.coefficient_ = -out.coefficient_;
  return out;
}

ExactScalar ExactScalar::operator+(const Rational& rhs) const {
  ExactScalar out = *this;
  out.rational_ += rhs;
  return out;
}

ExactScalar ExactScalar::operator*(const Rational& rhs) const {
  if (rhs == 0) return ExactScalar();
  ExactScalar out = *this;
  out.rational_ *= rhs;
  out.coefficient_ *= rhs;
  return out;
}

std::optional<ExactScalar> ExactScalar::try_add(const ExactScalar& rhs) const {
  if (rhs.is_rational()) return *this + rhs.rational_;
  if (is_rational()) return rhs + rational_;
  if (radicand_ != rhs.radicand_) return std::nullopt;
  ExactScalar out = *this;
  out.rational_ += rhs.rational_;
  out.coefficient_ += rhs.coefficient_;
  if (out.coefficient_ == 0) out.radicand_ = 0;
  return out;
}

std::optional<ExactScalar> ExactScalar::try_mul(const ExactScalar& rhs) const {
  if (rhs.is_rational()) return *this * rhs.rational_;
  if (is_rational()) return rhs * rational_;
  if (radicand_ != rhs.radicand_) return std::nullopt;
  const Rational d(radicand_);
  ExactScalar out;
  out.rational_ = rational_ * rhs.rational_ + coefficient_ * rhs.coefficient_ * d;
  out.coefficient_ = rational_ * rhs.coefficient_ + coefficient_ * rhs.rational_;
  if (out.coefficient_ != 0) out.radicand_ = radicand_;
  return out;
}

ExactScalar ExactScalar::add(const ExactScalar& rhs) const {
  auto out = try_add(rhs);
  if (!out) throw NotRepresentable("sum of surds with different radicands");
  return *out;
}

ExactScalar ExactScalar::mul(const ExactScalar& rhs) const {
  auto out = try_mul(rhs);
  if (!out) throw NotRepresentable("product of surds with different radicands");
  return *out;
}

ExactScalar ExactScalar::square() const { return mul(*this); }

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (is_rational()) return ExactScalar(Rational(1) / rational_);
  // (r + c s)^-1 = (r - c s) / (r^2 - c^2 d)
  const Rational norm = rational_ * rational_ - coefficient_ * coefficient_ * Rational(radicand_);
  ExactScalar out;
  out.rational_ = rational_ / norm;
  out.coefficient_ = -coefficient_ / norm;
  out.radicand_ = radicand_;
  return out;
}

int ExactScalar::sign() const {
  if (!is_real()) throw DomainError("sign of an imaginary value");
  const int rs = sgn(rational_);
  const int cs = sgn(coefficient_);
  if (cs == 0) return rs;
  if (rs == 0 || rs == cs) return cs;
  // opposite signs: compare r^2 with c^2 d
  const Rational lhs = rational_ * rational_;
  const Rational rhs = coefficient_ * coefficient_ * Rational(radicand_);
  const int cmp = ::cmp(lhs, rhs);
  return cmp > 0 ? rs : (cmp < 0 ? cs : 0);
}

double ExactScalar::to_double() const {
  double value = rational_.get_d();
  if (!is_rational() && radicand_ > 0) value += coefficient_.get_d() * std::sqrt(radicand_.get_d());
  return value;
}

int compare(const ExactScalar& a, const ExactScalar& b) { return a.sub(b).sign(); }

std::string to_string(const ExactScalar& value) {
  if (value.is_rational()) return to_string(value.rational_part());
  std::string surd = "(" + to_string(value.surd_coefficient()) + ")*sqrt(" + value.radicand().get_str() + ")";
  if (value.rational_part() == 0) return surd;
  return to_string(value.rational_part()) + "+" + surd;
}

ExactScalar parse_exact_scalar(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  const auto sqrt_pos = compact.find("sqrt(");
  if (sqrt_pos == std::string::npos) return ExactScalar(parse_rational(compact));
  if (compact.back() != ')') throw ParseError("malformed surd '" + compact + "'");
  const std::string radicand_text = compact.substr(sqrt_pos + 5, compact.size() - sqrt_pos - 6);
  const Rational radicand = parse_rational(radicand_text);
  if (!is_integer(radicand)) throw ParseError("surd radicand must be an integer in '" + compact + "'");
  std::string head = compact.substr(0, sqrt_pos);
  // head is "", "c*", "(c)*", "r+(c)*", "r-(c)*"
  Rational rational(0);
  Rational coef(1);
  if (!head.empty()) {
    if (head.back() != '*') throw ParseError("malformed surd '" + compact + "'");
    head.pop_back();
    std::string coef_text = head;
    const auto open = head.find('(');
    if (open != std::string::npos) {
      if (head.back() != ')') throw ParseError("malformed surd '" + compact + "'");
      coef_text = head.substr(open + 1, head.size() - open - 2);
      std::string prefix = head.substr(0, open);
      bool negate = false;
      if (!prefix.empty() && (prefix.back() == '+' || prefix.back() == '-')) {
        negate = prefix.back() == '-';
        prefix.pop_back();
      }
      if (!prefix.empty()) rational = parse_rational(prefix);
      coef = parse_rational(coef_text);
      if (negate) coef = -coef;
    } else {
      coef = parse_rational(coef_text);
    }
  }
  return ExactScalar::surd(rational, coef, radicand.get_num());
}

}  // namespace swing
