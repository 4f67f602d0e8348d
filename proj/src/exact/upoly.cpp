#include "swing/exact/upoly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "swing/error.hpp"

namespace swing {

UPoly::UPoly(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) { trim(); }

UPoly::UPoly(const Rational& constant) {
  if (constant != 0) coefficients_.push_back(constant);
}

UPoly UPoly::x() { return UPoly(std::vector<Rational>{Rational(0), Rational(1)}); }

UPoly UPoly::linear_factor(const Rational& root) { return UPoly(std::vector<Rational>{Rational(-root), Rational(1)}); }

void UPoly::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational UPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return Rational(0);
  return coefficients_[static_cast<std::size_t>(i)];
}

Rational UPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::derivative() const {
  if (coefficients_.size() <= 1) return UPoly();
  std::vector<Rational> out(coefficients_.size() - 1);
  for (std::size_t i = 1; i < coefficients_.size(); ++i) out[i - 1] = coefficients_[i] * static_cast<long>(i);
  return UPoly(std::move(out));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / lead());
}

UPoly UPoly::shifted(const Rational& offset) const {
  // Horner in the shifted variable: p(x+o) = (...(a_n (x+o) + a_{n-1})(x+o) + ...)
  UPoly base(std::vector<Rational>{offset, Rational(1)});
  UPoly acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * base + UPoly(*it);
  return acc;
}

UPoly UPoly::reversed(int n) const {
  if (n < degree()) throw std::invalid_argument("UPoly::reversed: n below degree");
  std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
  for (int i = 0; i <= degree(); ++i) out[static_cast<std::size_t>(n - i)] = coefficients_[static_cast<std::size_t>(i)];
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> out(std::max(a.coefficients_.size(), b.coefficients_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) out[i] += a.coefficients_[i];
  for (std::size_t i = 0; i < b.coefficients_.size(); ++i) out[i] += b.coefficients_[i];
  return UPoly(std::move(out));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> out(a.coefficients_.size() + b.coefficients_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i)
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  return UPoly(std::move(out));
}

UPoly operator*(const UPoly& a, const Rational& b) {
  std::vector<Rational> out = a.coefficients_;
  for (auto& c : out) c *= b;
  return UPoly(std::move(out));
}

UPolyDivision divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {UPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(da - db + 1), Rational(0));
  const Rational inv_lead = Rational(1) / b.lead();
  for (int i = da; i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefficient(j);
  }
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto qr = divmod(a, b);
  if (!qr.remainder.is_zero()) throw std::logic_error("exact_quotient: non-zero remainder");
  return qr.quotient;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a;
  UPoly y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // extended Euclid: s*a + t*m = g
  UPoly r0 = divmod(a, m).remainder, r1 = m;
  UPoly s0(Rational(1)), s1;
  while (!r1.is_zero()) {
    auto qr = divmod(r0, r1);
    UPoly s2 = s0 - qr.quotient * s1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.degree() != 0) throw DomainError("polynomial is not invertible modulo the given factor");
  return divmod(s0 * (Rational(1) / r0.lead()), m).remainder;
}

UPoly power(const UPoly& base, int exponent) {
  UPoly out(Rational(1));
  for (int i = 0; i < exponent; ++i) out = out * base;
  return out;
}

UPoly square_free_part(const UPoly& p) {
  if (p.is_constant()) return UPoly(Rational(1));
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

namespace {

std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::map<Integer, int> primes;
  Integer rest = n;
  for (unsigned long p = 2; Integer(p) * p <= rest; p += (p == 2 ? 1 : 2)) {
    if (p > 50000000UL) throw NotRepresentable("rational root search: integer too large to factor");
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++primes[Integer(p)];
    }
  }
  if (rest > 1) ++primes[rest];
  std::vector<Integer> out{Integer(1)};
  for (const auto& [prime, count] : primes) {
    const std::size_t existing = out.size();
    Integer power = 1;
    for (int e = 1; e <= count; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < existing; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots of the zero polynomial");
  UPoly sf = square_free_part(p);
  std::vector<Rational> roots;
  // factor out x
  if (sf.coefficient(0) == 0) {
    roots.push_back(Rational(0));
    sf = exact_quotient(sf, UPoly::x());
  }
  if (sf.degree() <= 0) return roots;
  // integer coefficients
  Integer lcm_den = 1;
  for (const auto& c : sf.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  for (const auto& c : sf.coefficients()) ints.push_back(Rational(c * Rational(lcm_den)).get_num());
  const auto num_divs = divisors(ints.front());
  const auto den_divs = divisors(ints.back());
  for (const auto& d : den_divs) {
    for (const auto& n : num_divs) {
      for (int sign : {1, -1}) {
        Rational cand(n * sign, d);
        cand.canonicalize();
        if (cand.get_den() != d) continue;  // reached from a smaller denominator
        if (sf(cand) == 0) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

int root_multiplicity(const UPoly& p, const Rational& root) {
  if (p.is_zero()) throw std::domain_error("root_multiplicity of the zero polynomial");
  int m = 0;
  UPoly q = p;
  const UPoly lin = UPoly::linear_factor(root);
  while (true) {
    auto qr = divmod(q, lin);
    if (!qr.remainder.is_zero()) return m;
    q = std::move(qr.quotient);
    ++m;
  }
}

std::vector<std::pair<UPoly, int>> split_by_multiplicity(const UPoly& factor, const UPoly& host) {
  std::vector<std::pair<UPoly, int>> out;
  UPoly rest = factor.monic();
  UPoly current = host;
  int m = 0;
  while (rest.degree() > 0) {
    UPoly g = current.is_zero() ? rest : gcd(rest, current);
    UPoly piece = exact_quotient(rest, g);
    if (piece.degree() > 0) out.emplace_back(piece.monic(), m);
    if (g.degree() <= 0) break;
    rest = g;
    current = exact_quotient(current, g);
    ++m;
  }
  return out;
}

std::string to_string(const UPoly& p, const std::string& variable) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    Rational c = p.coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    if (i == 0) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += variable;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace swing
