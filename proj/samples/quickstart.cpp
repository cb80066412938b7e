// Decide whether 4x^4 + 4x^2 + 9 takes only square values on Q_2.

#include <iostream>

#include "padicpow/padicpow.hpp"

int main() {
  using namespace padicpow;
  const LocalField q2 = make_field(2, FieldKind::Base);
  const IntPoly f = parse_polynomial("4x^4+4x^2+9", q2);

  const DecisionReport r = decide_CK(f, q2);
  std::cout << poly::to_string(f) << " maps Q_2 into squares: " << (r.verdict ? "yes" : "no") << "\n";
  std::cout << "square of a polynomial: " << (is_perfect_pth_power_poly(f, q2) ? "yes" : "no") << "\n";

  const DecisionReport g = decide_CK(parse_polynomial("1+8x", q2), q2);
  if (g.counterexample)
    std::cout << "1+8x fails at a = " << (g.counterexample->inverted ? "1/" : "") << g.counterexample->point.str()
              << "\n";
  return 0;
}
