#include "swing/exact/poly.hpp"

#include <algorithm>

namespace swing {

Poly::Poly(const Rational& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

Poly Poly::variable(int index) {
  Poly out;
  std::array<int, kVariables> exps{};
  exps.at(static_cast<std::size_t>(index)) = 1;
  out.terms_.push_back({pack(exps), Rational(1)});
  return out;
}

Poly::Monomial Poly::pack(const std::array<int, kVariables>& exponents) {
  Monomial key = 0;
  for (int i = kVariables - 1; i >= 0; --i) key = (key << 8) | static_cast<Monomial>(exponents[static_cast<std::size_t>(i)] & 0xff);
  return key;
}

std::array<int, Poly::kVariables> Poly::unpack(Monomial monomial) {
  std::array<int, kVariables> exps{};
  for (auto& e : exps) {
    e = static_cast<int>(monomial & 0xff);
    monomial >>= 8;
  }
  return exps;
}

int Poly::total_degree(Monomial monomial) {
  int deg = 0;
  for (int e : unpack(monomial)) deg += e;
  return deg;
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial == 0) return terms_.front().coefficient;
  return Rational(0);
}

int Poly::degree() const {
  int deg = -1;
  for (const auto& t : terms_) deg = std::max(deg, total_degree(t.monomial));
  return deg;
}

Rational Poly::evaluate(const std::array<Rational, kVariables>& values) const {
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational term = t.coefficient;
    const auto exps = unpack(t.monomial);
    for (std::size_t i = 0; i < exps.size(); ++i)
      for (int e = 0; e < exps[i]; ++e) term *= values[i];
    sum += term;
  }
  return sum;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& t : out.terms_) t.coefficient = -t.coefficient;
  return out;
}

namespace {

template <class Combine>
std::vector<Poly::Term> merge_sorted(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b, Combine combine) {
  std::vector<Poly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].monomial < b[j].monomial)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].monomial < a[i].monomial) {
      out.push_back({b[j].monomial, combine(Rational(0), b[j].coefficient)});
      ++j;
    } else {
      Rational c = combine(a[i].coefficient, b[j].coefficient);
      if (c != 0) out.push_back({a[i].monomial, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_sorted(terms_, rhs.terms_, [](const Rational& x, const Rational& y) { return Rational(x + y); });
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.terms_.empty()) return *this;
  terms_ = merge_sorted(terms_, rhs.terms_, [](const Rational& x, const Rational& y) { return Rational(x - y); });
  return *this;
}

Poly& Poly::operator*=(const Rational& rhs) {
  if (rhs == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coefficient *= rhs;
  return *this;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.monomial < y.monomial; });
  Poly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().monomial == t.monomial) {
      out.terms_.back().coefficient += t.coefficient;
    } else {
      if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && out.terms_.back().coefficient == 0) out.terms_.pop_back();
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_constant()) return b * a.constant_term();
  if (b.is_constant()) return a * b.constant_term();
  PolyAccumulator acc;
  acc.add_product(a, b);
  return acc.result();
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].monomial != b.terms_[i].monomial || a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  return true;
}

void PolyAccumulator::add_product(const Poly& a, const Poly& b) {
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) pending_.push_back({x.monomial + y.monomial, x.coefficient * y.coefficient});
}

void PolyAccumulator::add(const Poly& a) { pending_.insert(pending_.end(), a.terms().begin(), a.terms().end()); }

Poly PolyAccumulator::result() {
  Poly out = Poly::from_terms(std::move(pending_));
  pending_.clear();
  return out;
}

std::string to_string(const Poly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  for (const auto& t : poly.terms()) {
    Rational c = t.coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (!out.empty() || negative) out += negative ? "-" : "+";
    std::string mono;
    const auto exps = Poly::unpack(t.monomial);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(i + 1);
      if (exps[i] > 1) mono += "^" + std::to_string(exps[i]);
    }
    if (mono.empty()) {
      out += to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += to_string(c) + "*" + mono;
    }
  }
  return out;
}

}  // namespace swing
