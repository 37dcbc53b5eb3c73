// five points on the projective line over Q(a,b) with a logistic derivation
#include <iostream>

#include "grassmann/morphisms.hpp"

using namespace grassmann;

int main() {
  Context ctx({"a", "b"}, Derivation::logistic(2, {0, 1}));
  RationalFunction a = ctx.parse("a"), b = ctx.parse("b"), o(0), i(1);
  Configuration c({{o, i}, {i, o}, {i, i}, {a, i}, {b, i}});
  BetaElement image = tau1_2(boundary_d(c));
  std::cout << "tau1_2(d c):\n" << serialize(ctx, image);
  for (const auto& [g, f] : image.terms())
    std::cout << "D-weight of " << ctx.str(g.arg) << ": " << ctx.str(f.materialize(ctx) * d_weight(ctx, g.arg)) << "\n";
  std::cout << "partial2: " << (partial2(ctx, image).is_zero(ctx) ? "0" : "nonzero") << "\n";
}
