#include "swing/exact/rational.hpp"

#include <cctype>

#include "swing/error.hpp"

namespace swing {

namespace {

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

bool valid_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char ch : text)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_integer(std::string_view text) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = trim(text.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(text.substr(slash + 1));
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+')
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer d = parse_integer(den);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational value(parse_integer(num), d);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Integer floor_of(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

bool exact_sqrt(const Integer& n, Integer& root) {
  if (n < 0) return false;
  if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  return true;
}

bool exact_sqrt(const Rational& value, Rational& root) {
  Integer num, den;
  if (!exact_sqrt(value.get_num(), num) || !exact_sqrt(value.get_den(), den)) return false;
  root = Rational(num, den);
  root.canonicalize();
  return true;
}

SquareFreeSplit square_free_split(const Integer& n) {
  if (n == 0) return {Integer(0), Integer(0)};
  Integer rest = abs(n);
  Integer outer = 1;
  Integer core = 1;
  constexpr unsigned long kTrialLimit = 1000000;
  bool rest_is_prime_or_one = false;
  for (unsigned long p = 2; p <= kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (Integer(p) * p > rest) {
      rest_is_prime_or_one = true;
      break;
    }
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned count = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) outer *= p;
    if (count % 2 == 1) core *= p;
  }
  if (rest > 1) {
    Integer root;
    if (rest_is_prime_or_one) {
      core *= rest;
    } else if (exact_sqrt(rest, root)) {
      outer *= root;
    } else {
      // No prime factor below the trial limit: if rest < limit^3 it has at most
      // two prime factors, and being a non-square it is square-free.
      Integer limit_cubed = Integer(kTrialLimit) * kTrialLimit * kTrialLimit;
      if (rest >= limit_cubed) throw NotRepresentable("integer too large to split into square-free form");
      core *= rest;
    }
  }
  if (n < 0) core = -core;
  return {outer, core};
}

}  // namespace swing
