#pragma once

#include <string>

#include "swing/exact/rational.hpp"

namespace swing {

struct LameClassification {
  enum class Kind { kLameHermite, kBrioschiHalphenCrawford, kBaldassarri, kOutsideCatalogue };
  Kind kind = Kind::kOutsideCatalogue;
  // n or -1-n, whichever is >= -1/2 (n(n+1) is unchanged).
  Rational canonical_n;
  // The BHC and Baldassarri cases also need an algebraic relation between
  // B, g2, g3 that is not checked here.
  bool necessary_only = false;
  std::string note;
};

std::string to_string(LameClassification::Kind kind);

// Catalogue position of xi'' = (n(n+1) wp + B) xi. Throws DomainError when
// g2^3 - 27 g3^2 = 0.
LameClassification classify_lame(const Rational& n, const Rational& B, const Rational& g2, const Rational& g3);

}  // namespace swing
