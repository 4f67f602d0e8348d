#include "swing/exact/eps_jet.hpp"

namespace swing {

namespace {

std::vector<Rational> trig_taylor(int n, int parity) {
  std::vector<Rational> out(static_cast<std::size_t>(n + 1), Rational(0));
  Rational factorial(1);
  for (int i = 0; i <= n; ++i) {
    if (i > 0) factorial *= i;
    if (i % 2 != parity) continue;
    const int sign = ((i - parity) / 2) % 2 == 0 ? 1 : -1;
    out[static_cast<std::size_t>(i)] = Rational(sign) / factorial;
  }
  return out;
}

}  // namespace

std::vector<Rational> cosine_taylor(int n) { return trig_taylor(n, 0); }
std::vector<Rational> sine_taylor(int n) { return trig_taylor(n, 1); }

}  // namespace swing
