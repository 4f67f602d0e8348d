#include "swing/fuchsian/exponential.hpp"

#include <map>

#include "swing/exact/linear_solve.hpp"

namespace swing {

namespace {

// Sum of elements of possibly different quadratic fields.
struct SurdSum {
  Rational rational{0};
  std::map<Integer, Rational> surds;

  void add(const ExactScalar& x, long weight) {
    rational += x.rational_part() * weight;
    if (!x.is_rational()) {
      Rational& c = surds[x.radicand()];
      c += x.surd_coefficient() * weight;
      if (c == 0) surds.erase(x.radicand());
    }
  }
  void add(const SurdSum& other) {
    rational += other.rational;
    for (const auto& [d, c] : other.surds) {
      Rational& mine = surds[d];
      mine += c;
      if (mine == 0) surds.erase(d);
    }
  }
};

struct Choice {
  ExponentAssignment assignment;
  SurdSum contribution;
  bool symmetric = true;
  bool rational = true;
};

std::vector<Choice> choices_for(const SingularPointData& data) {
  std::vector<ExactScalar> exps;
  if (data.log_flag == LogFlag::kLog || data.exponents[0] == data.exponents[1]) {
    exps.push_back(data.exponents[1]);
  } else {
    exps = {data.exponents[0], data.exponents[1]};
  }
  const int weight = data.location.weight();
  std::vector<Choice> out;
  for (const auto& e : exps) {
    Choice c;
    c.assignment = {data.location, e, weight, e};
    c.contribution.add(e, weight);
    c.rational = e.is_rational();
    out.push_back(std::move(c));
  }
  if (exps.size() == 2 && weight > 1) {
    for (int j = 1; j < weight; ++j) {
      Choice c;
      c.assignment = {data.location, exps[0], j, exps[1]};
      c.contribution.add(exps[0], j);
      c.contribution.add(exps[1], weight - j);
      c.symmetric = false;
      c.rational = exps[0].is_rational() && exps[1].is_rational();
      out.push_back(std::move(c));
    }
  }
  return out;
}

RationalFunction log_derivative_of(const std::vector<ExponentAssignment>& exponents) {
  RationalFunction sigma;
  for (const auto& a : exponents) {
    const Rational& e = a.exponent.rational_part();
    if (e == 0) continue;
    switch (a.location.kind) {
      case SingularLocation::Kind::kRational:
        sigma = sigma + RationalFunction(UPoly(e), UPoly::linear_factor(a.location.point));
        break;
      case SingularLocation::Kind::kFactor:
        sigma = sigma + RationalFunction(a.location.factor.derivative() * e, a.location.factor);
        break;
      case SingularLocation::Kind::kInfinity:
        break;
    }
  }
  return sigma;
}

// Polynomial P of degree m (monic) with (P * exp(int sigma))'' + p(...)' + q(...) = 0.
std::optional<UPoly> solve_polynomial_factor(const FuchsianODE& ode, const RationalFunction& sigma, int m) {
  const RationalFunction A = RationalFunction(2) * sigma + ode.p();
  const RationalFunction B = sigma.derivative() + sigma * sigma + ode.p() * sigma + ode.q();
  const UPoly& ad = A.denominator();
  const UPoly& bd = B.denominator();
  const UPoly g = gcd(ad, bd);
  const UPoly common = exact_quotient(ad * bd, g);
  const UPoly a_num = A.numerator() * exact_quotient(common, ad);
  const UPoly b_num = B.numerator() * exact_quotient(common, bd);

  std::vector<UPoly> images;
  int rows = 0;
  for (int i = 0; i <= m; ++i) {
    const UPoly xi = power(UPoly::x(), i);
    const UPoly image = xi.derivative().derivative() * common + a_num * xi.derivative() + b_num * xi;
    rows = std::max(rows, image.degree() + 1);
    images.push_back(image);
  }
  RationalMatrix matrix;
  RationalVector rhs;
  for (int row = 0; row < rows; ++row) {
    RationalVector line;
    for (const auto& image : images) line.push_back(image.coefficient(row));
    matrix.push_back(std::move(line));
    rhs.push_back(0);
  }
  RationalVector normalization(static_cast<std::size_t>(m + 1), Rational(0));
  normalization.back() = 1;
  matrix.push_back(std::move(normalization));
  rhs.push_back(1);
  const auto solved = solve_linear(matrix, rhs);
  if (!solved.solution) return std::nullopt;
  return UPoly(*solved.solution);
}

}  // namespace

RationalFunction riccati_defect(const FuchsianODE& ode, const RationalFunction& omega) {
  return omega.derivative() + omega * omega + ode.p() * omega + ode.q();
}

ExponentialSearch find_exponential_solutions(const FuchsianODE& ode) {
  std::vector<SingularPointData> points;
  for (auto& data : singular_exponents(ode))
    if (data.location.kind != SingularLocation::Kind::kInfinity) points.push_back(std::move(data));
  points.push_back(infinity_data(ode));

  std::vector<std::vector<Choice>> options;
  for (const auto& data : points) options.push_back(choices_for(data));

  ExponentialSearch search;
  std::vector<const Choice*> picked(options.size());
  auto visit = [&](auto&& self, std::size_t index) -> void {
    if (index < options.size()) {
      for (const auto& choice : options[index]) {
        picked[index] = &choice;
        self(self, index + 1);
      }
      return;
    }
    SurdSum total;
    bool symmetric = true;
    bool rational = true;
    std::vector<ExponentAssignment> exponents;
    for (const Choice* c : picked) {
      total.add(c->contribution);
      symmetric = symmetric && c->symmetric;
      rational = rational && c->rational;
      exponents.push_back(c->assignment);
    }
    // m = -e_inf - sum e_i
    if (!total.surds.empty()) return;
    const Rational m = -total.rational;
    if (!is_integer(m) || m < 0) return;
    const int degree = static_cast<int>(m.get_num().get_si());
    if (!symmetric) {
      search.requires_extension.push_back({exponents, degree, "requires algebraic extension: asymmetric exponents at conjugate roots"});
      return;
    }
    if (!rational) {
      search.requires_extension.push_back({exponents, degree, "requires algebraic extension: irrational exponents"});
      return;
    }
    const RationalFunction sigma = log_derivative_of(exponents);
    const auto polynomial = solve_polynomial_factor(ode, sigma, degree);
    if (!polynomial) {
      // for m = 0 the system is the substitution of the bare candidate
      search.rejected.push_back({exponents, degree,
                                 degree == 0 ? "substitution defect is nonzero" : "no polynomial factor of degree " + std::to_string(degree)});
      return;
    }
    const RationalFunction omega = RationalFunction(polynomial->derivative(), *polynomial) + sigma;
    if (!riccati_defect(ode, omega).is_zero()) {
      search.rejected.push_back({exponents, degree, "substitution defect is nonzero"});
      return;
    }
    search.solutions.push_back({exponents, *polynomial, degree, omega});
  };
  visit(visit, 0);
  return search;
}

}  // namespace swing
