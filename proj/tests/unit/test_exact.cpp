#include <random>

#include "doctest.h"
#include "swing/error.hpp"
#include "swing/exact/eps_jet.hpp"
#include "swing/exact/exact_scalar.hpp"
#include "swing/exact/laurent.hpp"
#include "swing/exact/linear_solve.hpp"
#include "swing/exact/poly.hpp"
#include "swing/exact/upoly.hpp"
#include "swing/elliptic.hpp"

using namespace swing;
using Series = LaurentSeries<Rational>;

namespace {

Rational q(const char* text) { return parse_rational(text); }

Series poly_series(int start, std::vector<Rational> coeffs, int order = Series::kExact) {
  return Series(start, std::move(coeffs), order);
}

// Plain O(n^2) convolution over the certified window, independent of mul().
std::vector<Rational> naive_product(const Series& a, const Series& b, int lo, int hi) {
  std::vector<Rational> out;
  for (int n = lo; n <= hi; ++n) {
    Rational sum(0);
    for (int i = a.lowest_exponent(); i <= n - b.lowest_exponent(); ++i) sum += a.coefficient(i) * b.coefficient(n - i);
    out.push_back(sum);
  }
  return out;
}

Rational det(const RationalMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational total(0);
  for (std::size_t col = 0; col < n; ++col) {
    RationalMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    const Rational term = m[0][col] * det(minor);
    total += (col % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

}  // namespace

TEST_SUITE("exact") {

TEST_CASE("rational parsing and printing") {
  CHECK(q("6/4") == Rational(3, 2));
  CHECK(q(" -3/9 ") == Rational(-1, 3));
  CHECK(to_string(q("4/2")) == "2");
  CHECK(to_string(q("-7/3")) == "-7/3");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("square-free split") {
  auto s = square_free_split(Integer(72));
  CHECK(s.outer == 6);
  CHECK(s.core == 2);
  s = square_free_split(Integer(-50));
  CHECK(s.outer == 5);
  CHECK(s.core == -2);
  s = square_free_split(Integer("1000000007") * Integer("1000000007") * 3);
  CHECK(s.outer == Integer("1000000007"));
  CHECK(s.core == 3);
}

TEST_CASE("surd normalization and equality") {
  auto x = ExactScalar::surd(Rational(1), Rational(2), Integer(8));
  CHECK(x.radicand() == 2);
  CHECK(x.surd_coefficient() == 4);
  CHECK(ExactScalar::surd(Rational(3), Rational(0), Integer(5)) == ExactScalar(3));
  CHECK(ExactScalar::surd(Rational(0), Rational(2), Integer(9)) == ExactScalar(6));
  CHECK(ExactScalar::sqrt_of(Rational(1, 4)) == ExactScalar(Rational(1, 2)));
  const auto r = ExactScalar::sqrt_of(Rational(2, 3));
  CHECK(r.radicand() == 6);
  CHECK(r.surd_coefficient() == Rational(1, 3));
  CHECK(r.square() == ExactScalar(Rational(2, 3)));
  const auto i = ExactScalar::sqrt_of(Rational(-4, 9));
  CHECK_FALSE(i.is_real());
  CHECK(i.square() == ExactScalar(Rational(-4, 9)));
}

TEST_CASE("surd field operations") {
  const auto s2 = ExactScalar::sqrt_of(Rational(2));
  const auto s3 = ExactScalar::sqrt_of(Rational(3));
  CHECK_FALSE(s2.try_add(s3).has_value());
  CHECK_THROWS_AS(s2.add(s3), NotRepresentable);
  CHECK(s2.add(-s2).is_zero());
  CHECK(s2.mul(s2) == ExactScalar(2));
  const auto x = s2 + Rational(1);
  CHECK(x.mul(x.inverse()) == ExactScalar(1));
  CHECK(compare(s2, ExactScalar(Rational(141, 100))) > 0);
  CHECK(compare(s2, ExactScalar(Rational(142, 100))) < 0);
  CHECK((-s2 + Rational(3, 2)).sign() == 1);
  CHECK_THROWS_AS(ExactScalar::sqrt_of(Rational(-1)).sign(), DomainError);
  CHECK(ExactScalar(Rational(-3)).is_odd_integer());
  CHECK_FALSE(ExactScalar(Rational(4)).is_odd_integer());
}

TEST_CASE("surd text round trip") {
  for (const auto& value : {ExactScalar(Rational(5, 7)), ExactScalar::sqrt_of(Rational(2, 5)) * Rational(-3),
                            ExactScalar::sqrt_of(Rational(7)) + Rational(-1, 2), ExactScalar::sqrt_of(Rational(-3))}) {
    CHECK(parse_exact_scalar(to_string(value)) == value);
  }
  CHECK(to_string(ExactScalar::sqrt_of(Rational(2)) * Rational(1, 2)) == "(1/2)*sqrt(2)");
}

TEST_CASE("laurent add cancels to the empty series") {
  const auto a = Series::monomial(Rational(1), -2);
  const auto sum = a + (-a);
  CHECK(sum.is_zero());
  CHECK(sum.is_exact());
}

TEST_CASE("laurent valuation addition") {
  const auto p = mul(Series::monomial(Rational(1), -2), Series::monomial(Rational(1), 2));
  CHECK(p.valuation() == 0);
  CHECK(p.coefficients().size() == 1);
  CHECK(p.leading_coefficient() == 1);
}

TEST_CASE("wp squared matches an independent convolution") {
  const auto wp = wp_series(q("16/27"), q("-28/729"), 8);
  const auto sq = wp * wp;
  CHECK(sq.valuation() == -4);
  CHECK(sq.order() == wp.order() - 2);
  const auto naive = naive_product(wp, wp, -4, sq.order() - 1);
  for (int n = -4; n < sq.order(); ++n) CHECK(sq.coefficient(n) == naive[static_cast<std::size_t>(n + 4)]);
}

TEST_CASE("product certification and minimum order") {
  const auto a = poly_series(-1, {Rational(1), Rational(2)}, 3);
  const auto b = poly_series(0, {Rational(1)}, 5);
  CHECK(product_order(a, b) == 3);
  CHECK_THROWS_AS(mul(a, b, 4), TruncationError);
  CHECK_THROWS_AS(a.coefficient(3), TruncationError);
}

TEST_CASE("geometric inverse") {
  const auto a = poly_series(2, {Rational(1), Rational(-1)});
  const auto inv = invert(a, 6);
  CHECK(inv.valuation() == -2);
  CHECK(inv.order() == 6);
  for (int n = -2; n < 6; ++n) CHECK(inv.coefficient(n) == 1);
  CHECK_THROWS_AS(invert(a), TruncationError);
  const auto one = invert(Series::monomial(Rational(1), 0));
  CHECK(one.is_exact());
  CHECK(one.coefficient(0) == 1);
}

TEST_CASE("inverse of the a=-k radial series") {
  PendulumParams params{q("4/3"), q("-4/3"), Rational(0)};
  const auto orbit = particular_orbit_series(params, 10);
  const auto inv = invert(orbit.r);
  CHECK(inv.valuation() == 2);
  const auto product = orbit.r * inv;
  CHECK(product.order() > 5);
  for (int n = 0; n < product.order(); ++n) CHECK(product.coefficient(n) == (n == 0 ? 1 : 0));
}

TEST_CASE("inverse needs an invertible leading coefficient") {
  LaurentSeries<Poly> s(0, {Poly::variable(1), Poly(Rational(1))}, 5);
  CHECK_THROWS_AS(invert(s), DomainError);
  LaurentSeries<Poly> c(0, {Poly(Rational(2)), Poly::variable(1)}, 4);
  const auto inv = invert(c);
  const auto product = mul(c, inv);
  CHECK(product.coefficient(0) == Poly(Rational(1)));
  for (int n = 1; n < product.order(); ++n) CHECK(product.coefficient(n).is_zero());
}

TEST_CASE("termwise integration") {
  const auto a = poly_series(-2, {Rational(1), Rational(0), Rational(0), Rational(3)});
  const auto [anti, res] = integrate(a);
  CHECK(res == 0);
  CHECK(anti.coefficient(-1) == -1);
  CHECK(anti.coefficient(2) == Rational(3, 2));
  const auto [anti2, res2] = integrate(Series::monomial(Rational(5), -1));
  CHECK(anti2.is_zero());
  CHECK(res2 == 5);
  const auto wp = wp_series(Rational(1), Rational(2), 6);
  CHECK(integrate(wp).residue == 0);
}

TEST_CASE("series algebra laws on random series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> start(-3, 2);
  for (int trial = 0; trial < 40; ++trial) {
    auto random_series = [&](int order) {
      std::vector<Rational> c;
      for (int i = 0; i < 6; ++i) c.push_back(Rational(coef(rng)) / Rational(1 + std::abs(coef(rng))));
      c[0] = Rational(1 + std::abs(coef(rng)));
      return Series(start(rng), c, order);
    };
    const auto a = random_series(5);
    const auto b = random_series(6);
    CHECK(agree(a * b, b * a));
    CHECK((a * b).order() == (b * a).order());
    const auto prod = a * invert(a);
    for (int n = 0; n < prod.order(); ++n) CHECK(prod.coefficient(n) == (n == 0 ? 1 : 0));
    // d/dt of the antiderivative plus the residue term gives back the integrand
    const auto [anti, residue] = integrate(a);
    const auto back = derivative(anti) + Series::monomial(residue, -1);
    CHECK(agree(back, a));
    CHECK(back.order() == a.order());
  }
}

TEST_CASE("truncation monotonicity of products and inverses") {
  const auto w8 = wp_series(q("1/3"), q("2/7"), 8);
  const auto w14 = wp_series(q("1/3"), q("2/7"), 14);
  CHECK(agree(w8, w14));
  const auto i8 = invert(w8 * w8 + w8);
  const auto i14 = invert(w14 * w14 + w14);
  CHECK(i14.order() > i8.order());
  CHECK(agree(i8, i14));
}

TEST_CASE("polynomial coefficient ring") {
  const Poly c1 = Poly::variable(0);
  const Poly c3 = Poly::variable(2);
  const Poly p = c1 * c1 * Rational(3, 2) * c3 - Poly::variable(3);
  CHECK(to_string(p) == "3/2*c1^2*c3-c4");
  CHECK((p - p).is_zero());
  CHECK(p.degree() == 3);
  CHECK(p.evaluate({Rational(2), Rational(0), Rational(1), Rational(5)}) == 1);
  CHECK((c1 + c3) * (c1 - c3) == c1 * c1 - c3 * c3);
}

TEST_CASE("compose_analytic cosine law") {
  EpsJet<Rational> arg(4);
  const auto theta1 = poly_series(0, {Rational(1), Rational(2)});
  arg[1] = theta1;
  const auto c = compose_analytic(cosine_taylor(4), arg);
  CHECK(agree(c[0], Series::monomial(Rational(1), 0)));
  CHECK(c[1].is_zero());
  CHECK(agree(c[2], scale(theta1 * theta1, Rational(-1, 2))));
  CHECK(c[3].is_zero());
  CHECK(agree(c[4], scale(theta1 * theta1 * theta1 * theta1, Rational(1, 24))));
  const auto s = compose_analytic(sine_taylor(4), EpsJet<Rational>(4));
  for (int j = 0; j <= 4; ++j) CHECK(s[j].is_zero());
  EpsJet<Rational> bad(2);
  bad[0] = Series::monomial(Rational(1), 0);
  CHECK_THROWS_AS(compose_analytic(cosine_taylor(2), bad), DomainError);
}

TEST_CASE("cos^2 + sin^2 = 1 on random jets") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 5;
    EpsJet<Poly> arg(order);
    for (int j = 1; j <= order; ++j) {
      std::vector<Poly> cs;
      for (int i = 0; i < 3; ++i) cs.push_back(Poly(Rational(coef(rng))) + Poly::variable((i + j) % 4) * Rational(coef(rng)));
      arg[j] = LaurentSeries<Poly>(-1, cs, 4);
    }
    const auto c = compose_analytic(cosine_taylor(order), arg);
    const auto s = compose_analytic(sine_taylor(order), arg);
    const auto sum = c * c + s * s;
    CHECK(agree(sum[0], LaurentSeries<Poly>::monomial(Poly(Rational(1)), 0)));
    for (int j = 1; j <= order; ++j) CHECK(sum[j].is_zero());
  }
}

TEST_CASE("solve_linear basics") {
  RationalMatrix id{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  auto s = solve_linear(id, {Rational(3), Rational(-2)});
  REQUIRE(s.solution);
  CHECK((*s.solution)[0] == 3);
  CHECK((*s.solution)[1] == -2);
  CHECK(s.dimension == 0);
  RationalMatrix col{{Rational(1)}, {Rational(1)}};
  CHECK_FALSE(solve_linear(col, {Rational(1), Rational(2)}).solution);
  RationalMatrix flat{{Rational(1), Rational(1)}};
  s = solve_linear(flat, {Rational(2)});
  REQUIRE(s.solution);
  CHECK(s.dimension == 1);
  CHECK(null_space(flat, 2).size() == 1);
}

TEST_CASE("solve_linear for the degree-0 recurrence system") {
  // (n-m)(n-2-m) u_n = (n+1)(n+2) u_{n+1} with m = 0, u_0 normalized to 1
  const int m = 0;
  RationalMatrix rows;
  RationalVector rhs;
  for (int n = -1; n <= m; ++n) {
    std::vector<Rational> row(static_cast<std::size_t>(m + 1), Rational(0));
    if (n >= 0) row[static_cast<std::size_t>(n)] += Rational((n - m) * (n - 2 - m));
    if (n + 1 <= m) row[static_cast<std::size_t>(n + 1)] -= Rational((n + 1) * (n + 2));
    rows.push_back(row);
    rhs.push_back(0);
  }
  rows.push_back({Rational(1)});
  rhs.push_back(1);
  const auto s = solve_linear(rows, rhs);
  REQUIRE(s.solution);
  CHECK((*s.solution)[0] == 1);
}

TEST_CASE("solve_linear agrees with Cramer's rule") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-2, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 4);
    RationalMatrix m(n, RationalVector(n));
    RationalVector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(rng);
      b[i] = entry(rng);
    }
    const Rational d = det(m);
    const auto s = solve_linear(m, b);
    if (d == 0) {
      CHECK(s.rank < static_cast<int>(n));
      if (s.solution) CHECK(s.dimension > 0);
      continue;
    }
    REQUIRE(s.solution);
    CHECK(s.dimension == 0);
    for (std::size_t j = 0; j < n; ++j) {
      auto mj = m;
      for (std::size_t i = 0; i < n; ++i) mj[i][j] = b[i];
      CHECK((*s.solution)[j] == det(mj) / d);
    }
  }
}

TEST_CASE("univariate polynomial helpers") {
  const UPoly x = UPoly::x();
  const UPoly p = (x - UPoly(Rational(1, 2))) * (x + UPoly(3)) * (x * x - UPoly(2));
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == -3);
  CHECK(roots[1] == Rational(1, 2));
  CHECK(root_multiplicity(p * p, Rational(-3)) == 2);
  CHECK(square_free_part(p * p) == p.monic());
  const UPoly f = x * x - UPoly(2);
  const UPoly inv = inverse_mod(x + UPoly(1), f);
  CHECK(divmod(inv * (x + UPoly(1)), f).remainder == UPoly(1));
  CHECK(p.shifted(Rational(1))(Rational(0)) == p(Rational(1)));
  CHECK(to_string(x * x - UPoly(Rational(1, 2)) * x) == "x^2-1/2*x");
}

}  // TEST_SUITE
