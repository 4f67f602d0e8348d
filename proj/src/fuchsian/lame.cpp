#include "swing/fuchsian/lame.hpp"

#include "swing/error.hpp"

namespace swing {

std::string to_string(LameClassification::Kind kind) {
  switch (kind) {
    case LameClassification::Kind::kLameHermite:
      return "lame_hermite";
    case LameClassification::Kind::kBrioschiHalphenCrawford:
      return "bhc_candidate";
    case LameClassification::Kind::kBaldassarri:
      return "baldassarri_candidate";
    case LameClassification::Kind::kOutsideCatalogue:
      return "outside_catalogue";
  }
  return "unknown";
}

LameClassification classify_lame(const Rational& n, const Rational& /*B*/, const Rational& g2, const Rational& g3) {
  if (g2 * g2 * g2 - 27 * g3 * g3 == 0) throw DomainError("degenerate Lame equation: g2^3 - 27 g3^2 = 0");
  LameClassification out;
  out.canonical_n = n < Rational(-1, 2) ? Rational(-1 - n) : n;
  const Rational shifted = out.canonical_n + Rational(1, 2);  // >= 0
  if (is_integer(n)) {
    out.kind = LameClassification::Kind::kLameHermite;
    return out;
  }
  if (is_integer(shifted)) {
    out.kind = LameClassification::Kind::kBrioschiHalphenCrawford;
    out.necessary_only = true;
    out.note = "n+1/2 is a natural number; the algebraic condition on B, g2, g3 is not checked";
    return out;
  }
  const Integer& den = shifted.get_den();
  if (den == 3 || den == 4 || den == 5) {
    out.kind = LameClassification::Kind::kBaldassarri;
    out.necessary_only = true;
    out.note = "n+1/2 has denominator " + den.get_str() + "; the algebraic conditions on B, g2, g3 are not checked";
    return out;
  }
  out.note = "n is outside every solvable family";
  return out;
}

}  // namespace swing
